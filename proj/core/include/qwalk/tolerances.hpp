#pragma once

namespace qwalk {

// All numerical tolerances live here so audits have a single knob per check.
struct Tolerances {
    double hermiticity      = 1e-10;  // max |m(i,j) - conj(m(j,i))|
    double trace_unit       = 1e-10;  // |tr(rho) - 1|
    double psd              = 1e-8;   // lowest admissible eigenvalue of a state
    double eigen_residual   = 1e-9;   // ||A v - lambda v|| / ||A||_F
    double unitarity        = 1e-10;  // shift and step operators
    double coin_unitarity   = 1e-12;  // 2x2 coin operators
    double kraus_complete   = 1e-10;  // || sum K^dag K - I ||_max
    double trace_preserving = 1e-9;   // per evolution step
    double psd_evolved      = 1e-7;   // after long evolutions
    double zone_norm        = 1e-6;   // weighted zone probability sum
};

inline constexpr Tolerances kTol{};

}  // namespace qwalk
