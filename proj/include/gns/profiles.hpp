#pragma once

#include "gns/config.hpp"
#include "gns/mellin_barnes.hpp"
#include "gns/radial.hpp"

#include <optional>
#include <string>
#include <utility>

namespace gns {

enum class Method { quadrature, fox_h, meijer_g, automatic };

Method parse_method(const std::string& s);
std::string to_string(Method m);

// Position-space profile of |k|^{2a-d} / (1 + |k|^{2b}), b > a > 0.
struct ProfileAB {
    double a;
    double b;
    int d;
};

void validate(const ProfileAB& p);

// Fourier-space radial profile xi^{2a-d} / (1 + xi^{2b})
RadialProfile fourier_profile(const ProfileAB& p);

// F(0) = pi / (2^{d/2} Gamma(d/2) b sin(pi a/b))
double profile_ab_at_zero(const ProfileAB& p);

// N/M with M, N <= max_den when x is (numerically) such a fraction
std::optional<std::pair<int, int>> small_fraction(double x, int max_den = 12);

double profile_ab(const ProfileAB& p, double rho, Method method, const QuadratureConfig& cfg);

struct HProfileSpec {
    HFunctionSpec spec;
    double prefactor;  // 1 / (2^{d/2} b)
    double argument(double rho) const { return 0.25 * rho * rho; }
};
HProfileSpec h_spec_for_profile(const ProfileAB& p);

struct GProfileSpec {
    GFunctionSpec spec;  // canonical: sorted, cancelled pairs removed
    double prefactor;
    int N = 1;
    int M = 1;
    double argument(double rho) const;
    std::string to_string() const;  // "1/2 G(...) | (rho/4)^4"
};
GProfileSpec g_spec_for_profile(const ProfileAB& p, int N, int M);

// F_{jn}: a = (j+d)/2, b = n; requires j/n + d/2n < 1
ProfileAB linf_profile(double j, double n, int d);
double f_linf(double j, double n, int d, double rho, Method method, const QuadratureConfig& cfg);

// L_{jn}: a = j + d/2, b = n
ProfileAB l_profile_spec(double j, double n, int d);
double l_profile(double j, double n, int d, double rho, Method method, const QuadratureConfig& cfg);

struct Theta1Membership {
    bool linf = false;  // n < j/2 + d/2
    bool l2 = false;    // n < j/2 + d/4
};
Theta1Membership theta1_membership(double j, double n, int d);

// theta = 1 maximizer D^{-j} (1+|x|^2)^{-(d/2-n+j)} via its 2F1 form
double theta1_maximizer(double j, double n, int d, double rho);

// g(k) = |k|^{n-j} K_{n-j}(|k|) / (|k|^2 + eps^2)^{n-j/2}
RadialProfile trial_minus_fourier(double j, double n, double eps);

// |k|^j g(k): the Fourier data of D^j h
RadialProfile trial_minus_dj_fourier(double j, double n, double eps);

double m_profile(double j, double n, double eps, int d, double rho, const QuadratureConfig& cfg);

// smallest admissible regularization parameter
inline constexpr double kMinEps = 1e-3;

} // namespace gns
