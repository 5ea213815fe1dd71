#pragma once

#include "gns/config.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace gns {

// (parameter, scale factor)
struct GammaPair {
    double p;
    double scale;
    bool operator==(const GammaPair&) const = default;
};

// Fox H-function
//   H(z) = 1/(2 pi i) Int z^s prod G(1 - a_l + A_l s) prod G(b_l - B_l s)
//                        / [prod G(a*_l - A*_l s) prod G(1 - b*_l + B*_l s)] ds
struct HFunctionSpec {
    std::vector<GammaPair> upper_left;   // (a_l, A_l)
    std::vector<GammaPair> upper_right;  // (a*_l, A*_l)
    std::vector<GammaPair> lower_left;   // (b_l, B_l)
    std::vector<GammaPair> lower_right;  // (b*_l, B*_l)
};

// Meijer G-function: all scale factors equal to one.
struct GFunctionSpec {
    std::vector<double> a, a_star, b, b_star;
    bool operator==(const GFunctionSpec&) const = default;
};

HFunctionSpec lift(const GFunctionSpec& g);

std::vector<double> left_poles(const HFunctionSpec& spec, int count);
std::vector<double> right_poles(const HFunctionSpec& spec, int count);
double alpha(const HFunctionSpec& spec);
double alpha(const GFunctionSpec& spec);

// Midpoint between the rightmost left pole and the leftmost right pole.
double choose_contour(const HFunctionSpec& spec);

struct ContourEval {
    double value = 0.0;
    double imag_residue = 0.0;
    double abscissa = 0.0;
    double height = 0.0;  // truncation T
    long evals = 0;
};

// Line integral at Re s = abscissa; without an explicit abscissa the line is
// placed inside the pole gap at a distance adapted to |log z|.
ContourEval eval_h_detailed(const HFunctionSpec& spec, double z, const QuadratureConfig& cfg,
                            std::optional<double> abscissa = std::nullopt);
double eval_h(const HFunctionSpec& spec, double z, const QuadratureConfig& cfg);
double eval_g(const GFunctionSpec& spec, double z, const QuadratureConfig& cfg);

// lim z -> 0+: zero when every right pole is positive, otherwise the residue
// of the simple pole at s = 0; a pole left of 0 or a multiple pole throws.
double eval_h_at_zero(const HFunctionSpec& spec, const QuadratureConfig& cfg);
double eval_g_at_zero(const GFunctionSpec& spec, const QuadratureConfig& cfg);

// Sort ascending and drop cancelling Gamma pairs.
GFunctionSpec simplify_g(GFunctionSpec spec);

// "G(a ; b ; b* | arg)" with small-denominator fractions; a* is printed only when nonempty.
std::string to_string(const GFunctionSpec& spec);
std::string to_string(const HFunctionSpec& spec);

// Log of the Mellin-Barnes integrand at s (exposed for tests).
std::complex<double> log_integrand(const HFunctionSpec& spec, std::complex<double> s, double log_z);

} // namespace gns
