#pragma once

#include "gns/config.hpp"
#include "gns/errors.hpp"
#include "gns/radial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace gns {

using Rational = boost::multiprecision::cpp_rational;

// A parameter value: always a double, plus the exact rational when it was given as one.
struct Scalar {
    double value = 0.0;
    std::optional<Rational> exact;

    Scalar() = default;
    Scalar(double v) : value(v) {}
    Scalar(const Rational& q);

    bool is_exact() const { return exact.has_value(); }
    // "p/q", an integer, or the shortest round-tripping decimal
    std::string text() const;
};

// "37/40", "3", "-1/2" are exact. Decimals ("0.925", "1e-3") only when inexact is set.
Scalar parse_number(const std::string& s, bool inexact = false);

struct GnsParams {
    int d = 1;
    Scalar j, n, theta;
    double t = 2.0;  // Sobolev norm exponent
};

enum class RegimeKind { holder, theta_one, linf, general };
std::string to_string(RegimeKind k);

struct Regime {
    RegimeKind kind = RegimeKind::general;
    bool plus = false;        // theta n - j < d/2
    bool plusplus = false;    // theta < 1
    bool minusminus = false;  // n > 0, j <= n, j/n + d/2n < 1
    bool exact = false;       // predicates decided on rationals
    double r = 2.0;
    std::optional<Rational> inv_r;
};

// Throws ParameterError naming the violated inequality.
Regime classify(const GnsParams& p);

// [(1-theta)^{1-theta} theta^theta]^{1/t}, 0^0 = 1
double gn_sobolev_factor(double theta, double t = 2.0);

struct SharpPair {
    double G = 0.0;
    double S = 0.0;
};

SharpPair sharp_holder(double theta, double n);
// theta = 1; G = S except at n = j = 0
SharpPair sharp_theta1(double j, double n, int d);

struct SharpLinf {
    double theta = 0.0;
    double S = 0.0;
    double G = 0.0;
};
SharpLinf sharp_linf(double j, double n, int d);

// lambda maximizing the Sobolev quotient of f(lambda x); throws LimitCaseError at theta in {0, 1}, t < inf
double optimal_lambda(double theta, double t, double norm_l2, double norm_dn, int d, double p, double q, double n);

class LimitCaseError : public RegimeError {
public:
    using RegimeError::RegimeError;
};

SharpPair upper_plus(double j, double n, double theta, int d);
SharpPair upper_plusplus(double j, double n, double theta, int d);
// E and F factors of the ++ bound
double plusplus_e(double j, double n, double theta, int d);
double plusplus_f(double j, double n, double theta, int d);

struct EpsGrid {
    double lo = 0.01;
    double hi = 5.0;
    double step = 0.01;
    bool refine = false;  // Brent polish around the grid argmax
    int threads = 0;      // 0: GNS_THREADS, else hardware concurrency

    int size() const;
    double at(int i) const;
};

// worker count from GNS_THREADS (capped by hardware), at least 1
int default_threads();

struct MinusResult {
    double G = 0.0;
    double S = 0.0;
    double eps = 0.0;
    int grid_points = 0;
};
MinusResult lower_minus(double j, double n, double theta, int d, const QuadratureConfig& cfg = {},
                        const EpsGrid& grid = {});

struct AB {
    double A = 0.0;
    double B = 0.0;
};
AB ab_helpers(double j, double n, int d);

// ||L_jn||_r, r in [2, inf]
double l_norm(double j, double n, int d, double r, const QuadratureConfig& cfg = {});
SharpPair lower_minusminus(double j, double n, double theta, int d, const QuadratureConfig& cfg = {});

double riesz_constant(double n, int d);
double hls_constant(double n, int d);
double hausdorff_young_constant(double p, int d);

struct Rayleigh {
    double gn_ratio = 0.0;
    double sobolev_ratio = 0.0;
};
// h is the Fourier-side radial profile; r comes from params
Rayleigh rayleigh_quotients(const RadialProfile& h, const GnsParams& params, const QuadratureConfig& cfg = {});
Rayleigh rayleigh_quotients(const RadialProfile& h, double j, double n, double theta, int d,
                            const QuadratureConfig& cfg = {});

struct BoundsOptions {
    bool minus = true;
    EpsGrid grid;
};

struct BoundsReport {
    GnsParams params;
    Regime regime;
    std::optional<double> exact_g, exact_s;
    std::string exact_reason;
    std::optional<double> g_plus, s_plus, g_plusplus, s_plusplus;
    std::optional<double> g_minus, s_minus, minus_eps;
    std::optional<double> g_minusminus, s_minusminus;
    double best_lower_g = 0.0, best_upper_g = kInfinity;
    double best_lower_s = 0.0, best_upper_s = kInfinity;
};

BoundsReport best_bounds(const GnsParams& params, const QuadratureConfig& cfg = {}, const BoundsOptions& opt = {});

} // namespace gns
