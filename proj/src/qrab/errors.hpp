// errors.hpp — exception types used across the library.
//
// The C API maps each of these onto a status code; everything else is
// reported as an internal error.

#pragma once

#include <stdexcept>
#include <string>

namespace qrab {

// Invalid physical or mathematical input (negative squeeze, bad weights, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to converge within its refinement cap.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A grid or run configuration violates its documented invariants.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A resource cap (truncation size, memory) was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qrab
