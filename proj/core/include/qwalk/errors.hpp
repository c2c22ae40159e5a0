#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Operand dimensions do not line up (matmul, trace distance, partial trace).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A value fails its declared validity check (non-Hermitian state, bad range).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad run parameters (side < 2, lambda outside [0,1], unknown noise kind).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The requested computation exceeds a documented resource cap.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mixing-time target below the reachable floor of the evolution.
struct UnreachableTargetError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace qwalk
