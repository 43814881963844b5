#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padom {

/// Invalid arguments to a graph operation (bad endpoints, loops, bad family parameters, ...).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 or edge-list input. `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }
    /// Message without the offset suffix.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

/// A result contradicts a proven bound; indicates a bug, never a valid outcome.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace padom
