#pragma once

#include "gns/config.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <utility>

namespace gns {

enum class DecayKind { exponential, algebraic, oscillatory_algebraic };

// Envelope of |G(x)| at infinity: exp(-rate x) or x^(-power).
struct DecayClass {
    DecayKind kind = DecayKind::exponential;
    double power = 0.0;
    double rate = 1.0;

    static DecayClass exponential(double rate = 1.0) { return {DecayKind::exponential, 0.0, rate}; }
    static DecayClass algebraic(double p) { return {DecayKind::algebraic, p, 0.0}; }
    static DecayClass oscillatory(double p) { return {DecayKind::oscillatory_algebraic, p, 0.0}; }
};

// Real radial profile on (0, inf). `scale` is a characteristic length used to
// seat the quadrature panels; `nonneg_fourier` marks profiles that are the
// transform of a nonnegative function (their sup is the value at 0).
struct RadialProfile {
    std::function<double(double)> eval;
    std::optional<double> value_at_zero;
    DecayClass decay;
    double scale = 1.0;
    bool nonneg_fourier = false;
    // G vanishes outside [lo, hi]; integrals then run over this interval only
    std::optional<std::pair<double, double>> support;

    double operator()(double x) const {
        if (x == 0.0 && value_at_zero) return *value_at_zero;
        return eval(x);
    }
};

// surface area of the unit sphere in R^d
double sphere_area(int d);

// (2 pi^{d/2} / Gamma(d/2)) Int_0^inf x^{d-1} G(x) dx
double radial_integral(const RadialProfile& g, int d, const QuadratureConfig& cfg);

// Int_0^inf x^{2au-1} / (1 + x^{2b})^u dx in closed form, b > a > 0, u > 0
double beta_integral(double a, double b, double u);

// same integral for integer u via the sine form, including the integer au/b limit
double beta_integral_integer(double a, double b, int u);

// pi^{d/2+1} / (Gamma(d/2) n sin(pi (j/n + d/2n)))
double i_jn(double j, double n, int d);

// F(rho) = Int_0^inf x^{d-1} J_{d/2-1}(rho x)/(rho x)^{d/2-1} G(x) dx
double hankel_inverse_ft(const RadialProfile& g, int d, double rho, const QuadratureConfig& cfg);

// (|S^{d-1}| Int rho^{d-1} |F|^r)^{1/r}; r = inf gives the supremum
double lr_norm_radial(const RadialProfile& f, double r, int d, const QuadratureConfig& cfg);

// Same transform through double-exponential Fourier rules: faster and uniform in rho,
// for profiles smooth on (0, inf). abs_tol is in units of the result.
double hankel_inverse_ft_de(const RadialProfile& g, int d, double rho, double abs_tol, double rel_tol);

// rough location of the supremum of |F| (grid plus golden-section refinement)
double sup_abs(const RadialProfile& f, double rho_max);

struct MacdonaldAdmissibility {
    bool l1 = false;  // |mu| + sigma < d
    bool l2 = false;  // 2(|mu| + sigma) < d
};
MacdonaldAdmissibility macdonald_admissibility(double mu, double sigma, int d);

// closed-form transform of x -> K_mu(x) / x^sigma
double macdonald_transform(double mu, double sigma, int d, double rho);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

} // namespace gns
