#pragma once

#include <stdexcept>
#include <string>

namespace pslab {

// A requested range/table exceeds the configured memory or dimension limit.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A floating-point interval could not be resolved to a definite answer
// (e.g. a power straddles an integer after maximal refinement).  Raised
// instead of ever returning a silently wrong floor.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A derived parameter left its admissible range (e.g. the weight
// denominator 9 - u - eps turned nonpositive).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A quadrature or iteration failed to converge to its tolerance.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed CLI/config input.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace pslab
