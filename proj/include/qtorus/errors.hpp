#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

// Bad user input: wrong dimensions, non-symplectic matrix, malformed JSON.
// The CLI maps this to exit code 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested truncation radius cannot certify the tail below the
// requested tolerance. CLI exit code 3.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric trouble at run time (near-zero theta sample, ill-conditioned
// solve). CLI exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qtorus
