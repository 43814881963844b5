#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace padom {

using Vertex = int;

/// Maximum order supported by the bit-vector representation.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} stored as a single machine word.
///
/// The set does not know the order of the graph it is interpreted against;
/// callers keep members inside V(G).
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    /// {0, ..., n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// set difference
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    /// Members in ascending order.
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    /// "{0,2,5}"
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (Vertex v : *this) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

/// Orders sets by their ascending member lists.
inline bool lexicographic_less(VertexSet a, VertexSet b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

} // namespace padom
