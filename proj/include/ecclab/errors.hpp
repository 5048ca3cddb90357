#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecclab {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, edge lists). `offset` is the byte or
// line position the message refers to.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg), offset(offset) {}
    std::size_t offset;
};

// Precondition violations: bad sizes, absent edges, invalid partitions.
struct DomainError : Error {
    using Error::Error;
};

// Raised when an operation requires a connected graph. Carries one
// unreachable vertex pair as evidence.
struct ConnectivityError : Error {
    ConnectivityError(const std::string& msg, int u, int v)
        : Error(msg), u(u), v(v) {}
    int u;
    int v;
};

// Numerical failure (eigensolver non-convergence, root residual too large).
struct NumericalError : Error {
    using Error::Error;
};

// A paper statement failed to verify on an input it is claimed to cover.
struct VerificationError : Error {
    using Error::Error;
};

}  // namespace ecclab
