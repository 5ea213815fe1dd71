#pragma once

#include <string>

namespace gns {

struct QuadratureConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-10;
    int max_panels = 20000;
    // number of partial sums fed to the oscillatory-tail extrapolation
    int osc_accel_terms = 40;
    // tails are accepted once safety * tail estimate < tolerance
    double truncation_safety = 10.0;

    // throws ParameterError when a field is out of range
    void validate() const;
};

} // namespace gns
