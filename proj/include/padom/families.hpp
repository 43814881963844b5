#pragma once

#include <array>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "padom/error.hpp"
#include "padom/graph.hpp"

namespace padom {

// Labelings used by the generators:
//   path/cycle/complete   0..n-1 in order
//   complete_bipartite    parts {0..m-1} and {m..m+n-1}
//   star:k                center 0, leaves 1..k
//   crown:n               a_i = i, b_i = n+i, a_i ~ b_j iff i != j
//   circulant             x ~ y iff (x - y) mod n in S
//   generalized_petersen  x_i = i, y_i = n+i
//   rook:n                x_{i,j} (1-based) = (i-1)*n + (j-1)
//   corona(H)             H keeps its labels, pendant of v is |H|+v
//   join, disjoint_union  left operand first, right operand shifted by |left|
//   cartesian_product     (a, b) = a*|H| + b
enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    crown,
    corona,
    circulant,
    generalized_petersen,
    join,
    cartesian_product,
    rook,
    edgeless,
    disjoint_union,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 14> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::star, "star"},
    {Family::crown, "crown"},
    {Family::corona, "corona"},
    {Family::circulant, "circulant"},
    {Family::generalized_petersen, "generalized_petersen"},
    {Family::join, "join"},
    {Family::cartesian_product, "cartesian_product"},
    {Family::rook, "rook"},
    {Family::edgeless, "edgeless"},
    {Family::disjoint_union, "disjoint_union"},
}};

inline std::string_view family_name(Family f) {
    for (auto [tag, name] : kFamilyNames)
        if (tag == f) return name;
    return "?";
}

inline Family family_from_name(std::string_view name) {
    for (auto [tag, n] : kFamilyNames)
        if (n == name) return tag;
    throw GraphError("unknown family '" + std::string(name) + "'");
}

/// A named graph family with its integer parameters. Compound families
/// (corona, join, cartesian_product, disjoint_union) take operand specs.
///
/// Text form: `name:p1,p2,...` or `name(spec,spec)`, e.g. `crown:3`,
/// `circulant:9,1,8` (n then the distance set), `join(edgeless:3,edgeless:3)`.
struct FamilySpec {
    Family family = Family::edgeless;
    std::vector<int> params;
    std::vector<FamilySpec> operands;

    std::string to_string() const {
        std::string s(family_name(family));
        if (!operands.empty()) {
            s += '(';
            for (std::size_t i = 0; i < operands.size(); ++i) {
                if (i) s += ',';
                s += operands[i].to_string();
            }
            return s + ')';
        }
        if (!params.empty()) {
            s += ':';
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(params[i]);
            }
        }
        return s;
    }

    static FamilySpec parse(std::string_view text);

    bool operator==(const FamilySpec&) const = default;
};

namespace detail {

struct SpecParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    FamilySpec spec() {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected family name");
        FamilySpec out;
        try {
            out.family = family_from_name(text.substr(start, pos - start));
        } catch (const GraphError& e) {
            throw ParseError(e.what(), start);
        }
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            out.operands.push_back(spec());
            while (pos < text.size() && text[pos] == ',') {
                ++pos;
                out.operands.push_back(spec());
            }
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
        } else if (pos < text.size() && text[pos] == ':') {
            ++pos;
            out.params.push_back(integer());
            // a ',' followed by a letter belongs to an enclosing operand list
            while (pos + 1 < text.size() && text[pos] == ',' &&
                   (std::isdigit(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '-')) {
                ++pos;
                out.params.push_back(integer());
            }
        }
        return out;
    }

    int integer() {
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || (pos == start + 1 && text[start] == '-')) fail("expected integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
};

inline void require(bool ok, const FamilySpec& spec, const std::string& constraint) {
    if (!ok) throw GraphError(spec.to_string() + ": requires " + constraint);
}

inline void require_params(const FamilySpec& spec, std::size_t count) {
    require(spec.params.size() == count && spec.operands.empty(), spec,
            std::to_string(count) + " integer parameter(s)");
}

inline void require_operands(const FamilySpec& spec, std::size_t count) {
    require(spec.operands.size() == count && spec.params.empty(), spec,
            std::to_string(count) + " operand graph(s)");
}

inline void require_order(const FamilySpec& spec, long n) {
    require(n <= kMaxVertices, spec, "at most " + std::to_string(kMaxVertices) + " vertices");
}

} // namespace detail

inline FamilySpec FamilySpec::parse(std::string_view text) {
    detail::SpecParser p{text};
    FamilySpec out = p.spec();
    if (p.pos != text.size()) p.fail("trailing characters");
    return out;
}

/// Vertex-disjoint union; the second graph is shifted by |first|.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
    return build_graph(a.order() + b.order(), es);
}

/// G1 + G2: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& a, const Graph& b) {
    auto es = disjoint_union(a, b).edges();
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v) es.emplace_back(u, a.order() + v);
    return build_graph(a.order() + b.order(), es);
}

/// H ∘ K1: a pendant vertex attached to every vertex of H.
inline Graph corona(const Graph& h) {
    auto es = h.edges();
    for (Vertex v = 0; v < h.order(); ++v) es.emplace_back(v, h.order() + v);
    return build_graph(2 * h.order(), es);
}

inline Graph cartesian_product(const Graph& a, const Graph& b) {
    const int m = b.order();
    std::vector<Edge> es;
    for (Vertex x = 0; x < a.order(); ++x)
        for (auto [u, v] : b.edges()) es.emplace_back(x * m + u, x * m + v);
    for (auto [x, y] : a.edges())
        for (Vertex u = 0; u < m; ++u) es.emplace_back(x * m + u, y * m + u);
    return build_graph(a.order() * m, es);
}

/// {±g : g in generators} mod n, the usual way of writing circulant distance sets.
inline std::vector<int> symmetric_distances(int n, std::initializer_list<int> generators) {
    std::set<int> s;
    for (int g : generators) {
        s.insert(((g % n) + n) % n);
        s.insert(((-g % n) + n) % n);
    }
    return {s.begin(), s.end()};
}

inline Graph generate_family(const FamilySpec& spec) {
    using detail::require;
    using detail::require_operands;
    using detail::require_order;
    using detail::require_params;
    const auto& p = spec.params;
    std::vector<Edge> es;

    switch (spec.family) {
    case Family::edgeless:
        require_params(spec, 1);
        require(p[0] >= 0, spec, "n >= 0");
        require_order(spec, p[0]);
        return edgeless_graph(p[0]);

    case Family::path:
        require_params(spec, 1);
        require(p[0] >= 1, spec, "n >= 1");
        require_order(spec, p[0]);
        for (int i = 0; i + 1 < p[0]; ++i) es.emplace_back(i, i + 1);
        return build_graph(p[0], es);

    case Family::cycle:
        require_params(spec, 1);
        require(p[0] >= 3, spec, "n >= 3");
        require_order(spec, p[0]);
        for (int i = 0; i < p[0]; ++i) es.emplace_back(i, (i + 1) % p[0]);
        return build_graph(p[0], es);

    case Family::complete:
        require_params(spec, 1);
        require(p[0] >= 1, spec, "n >= 1");
        require_order(spec, p[0]);
        for (int i = 0; i < p[0]; ++i)
            for (int j = i + 1; j < p[0]; ++j) es.emplace_back(i, j);
        return build_graph(p[0], es);

    case Family::complete_bipartite:
        require_params(spec, 2);
        require(p[0] >= 1 && p[1] >= 1, spec, "m, n >= 1");
        require_order(spec, long{p[0]} + p[1]);
        for (int i = 0; i < p[0]; ++i)
            for (int j = 0; j < p[1]; ++j) es.emplace_back(i, p[0] + j);
        return build_graph(p[0] + p[1], es);

    case Family::star:
        require_params(spec, 1);
        require(p[0] >= 1, spec, "k >= 1 leaves");
        require_order(spec, long{p[0]} + 1);
        for (int i = 1; i <= p[0]; ++i) es.emplace_back(0, i);
        return build_graph(p[0] + 1, es);

    case Family::crown:
        require_params(spec, 1);
        require(p[0] >= 1, spec, "n >= 1");
        require_order(spec, 2L * p[0]);
        for (int i = 0; i < p[0]; ++i)
            for (int j = 0; j < p[0]; ++j)
                if (i != j) es.emplace_back(i, p[0] + j);
        return build_graph(2 * p[0], es);

    case Family::circulant: {
        require(spec.operands.empty() && p.size() >= 2, spec, "n followed by a nonempty distance set");
        const int n = p[0];
        require(n >= 1, spec, "n >= 1");
        require_order(spec, n);
        std::set<int> s(p.begin() + 1, p.end());
        for (int x : s) {
            require(x > 0 && x < n, spec, "distances in Z_n - {0}");
            require(s.count(n - x) > 0, spec, "x in S implies n-x in S (missing " + std::to_string(n - x) + ")");
        }
        for (int x = 0; x < n; ++x)
            for (int d : s) es.emplace_back(x, (x + d) % n);
        return build_graph(n, es);
    }

    case Family::generalized_petersen: {
        require_params(spec, 2);
        const int n = p[0], k = p[1];
        require(n >= 3, spec, "n >= 3");
        require(k > 0 && k < n, spec, "k in Z_n - {0}");
        require_order(spec, 2L * n);
        for (int i = 0; i < n; ++i) {
            es.emplace_back(i, (i + 1) % n);
            es.emplace_back(i, n + i);
            es.emplace_back(n + i, n + (i + k) % n);
        }
        return build_graph(2 * n, es);
    }

    case Family::rook: {
        require_params(spec, 1);
        require(p[0] >= 1, spec, "n >= 1");
        require_order(spec, long{p[0]} * p[0]);
        const Graph k = generate_family({Family::complete, {p[0]}, {}});
        return cartesian_product(k, k);
    }

    case Family::corona: {
        require_operands(spec, 1);
        const Graph h = generate_family(spec.operands[0]);
        require_order(spec, 2L * h.order());
        return corona(h);
    }

    case Family::join:
    case Family::disjoint_union:
    case Family::cartesian_product: {
        require_operands(spec, 2);
        const Graph a = generate_family(spec.operands[0]);
        const Graph b = generate_family(spec.operands[1]);
        if (spec.family == Family::cartesian_product) {
            require_order(spec, long{a.order()} * b.order());
            return cartesian_product(a, b);
        }
        require_order(spec, long{a.order()} + b.order());
        return spec.family == Family::join ? join(a, b) : disjoint_union(a, b);
    }
    }
    throw GraphError("unhandled family");
}

inline Graph generate_family(std::string_view text) { return generate_family(FamilySpec::parse(text)); }

} // namespace padom
