#pragma once

#include <stdexcept>
#include <string>

namespace qchan {

// Bad input values: shape mismatches, broken invariants, out-of-range args.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical procedure failed (non-convergence and the like).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed document; message carries the offending location.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Operation called outside its domain (e.g. a bound that needs a precondition).
struct DomainError : std::logic_error {
    explicit DomainError(const std::string& what) : std::logic_error(what) {}
};

// Computation would exceed configured resource limits.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qchan
