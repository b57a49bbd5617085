#ifndef BERGE_ERRORS_HPP
#define BERGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace berge {

// Malformed input files or streams.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called outside its contract (bad regime, parity,
// divisibility, unsupported range, search guard exceeded, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Desk-scale guard or time budget exhausted.
struct GuardExceeded : PreconditionError {
    explicit GuardExceeded(const std::string& msg) : PreconditionError(msg) {}
};

// The falsification alarm: a structural result this library is built to
// check appears to be violated.  Must never fire on correct inputs; CI maps
// it to a dedicated exit code so bugs and falsifications are distinguishable.
struct TheoremViolation : std::runtime_error {
    explicit TheoremViolation(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace berge

#endif
