#ifndef RSF_ERRORS_HPP
#define RSF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsf {

// Malformed textual input (polynomial grammar or graph file). `offset` is a
// byte index into the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Exact division over the integers left a nonzero remainder. Divisibility
// tests catch this and read it as "does not divide".
class DivisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument is outside the domain of the operation (degenerate cycle
// length, oriented graph where a plain one is required, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The brute-force enumerator refused to iterate 2^|E| subsets.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t edges, std::size_t cap)
        : std::runtime_error("enumeration cap exceeded: " + std::to_string(edges) +
                             " edges, cap " + std::to_string(cap)),
          edges_(edges), cap_(cap) {}

    std::size_t edges() const noexcept { return edges_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t edges_;
    std::size_t cap_;
};

} // namespace rsf

#endif
