#include "gns/bounds.hpp"

#include "gns/errors.hpp"
#include "gns/lower_minus.hpp"
#include "gns/profiles.hpp"
#include "gns/quadrature.hpp"
#include "gns/special.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <regex>
#include <thread>
#include <vector>

namespace gns {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;

double to_double(const Rational& q) { return q.convert_to<double>(); }

// value with an optional exact twin, enough arithmetic for the regime predicates
struct Q {
    double v;
    std::optional<Rational> q;
};
Q make(const Scalar& s) { return {s.value, s.exact}; }
Q make(int d) { return {static_cast<double>(d), Rational(d)}; }
Q operator+(const Q& a, const Q& b) {
    return {a.v + b.v, a.q && b.q ? std::optional<Rational>(*a.q + *b.q) : std::nullopt};
}
Q operator-(const Q& a, const Q& b) {
    return {a.v - b.v, a.q && b.q ? std::optional<Rational>(*a.q - *b.q) : std::nullopt};
}
Q operator*(const Q& a, const Q& b) {
    return {a.v * b.v, a.q && b.q ? std::optional<Rational>(*a.q * *b.q) : std::nullopt};
}
Q half(const Q& a) { return {0.5 * a.v, a.q ? std::optional<Rational>(*a.q / 2) : std::nullopt}; }

int sign(const Q& x, double scale = 1.0) {
    if (x.q) return x.q->sign();
    if (std::abs(x.v) <= kTol * std::max(1.0, scale)) return 0;
    return x.v > 0.0 ? 1 : -1;
}

bool near(double a, double b) { return std::abs(a - b) <= kTol * std::max(1.0, std::abs(b)); }

double sqrt_factor(double theta) { return gn_sobolev_factor(theta, 2.0); }

// (4 pi)^{-m/2} sqrt(Gamma(d/2 - m) / Gamma(d/2 + m)) (Gamma(d)/Gamma(d/2))^{m/d}
double gamma_m(double m, int d) {
    if (m == 0.0) return 1.0;
    const double h = 0.5 * d;
    const double l = -0.5 * m * std::log(4.0 * kPi) + 0.5 * (std::lgamma(h - m) - std::lgamma(h + m)) +
                     (m / d) * (std::lgamma(static_cast<double>(d)) - std::lgamma(h));
    return std::exp(l);
}

void check_d(int d) {
    if (d < 1) throw ParameterError("dimension must be a positive integer");
}

} // namespace

Scalar::Scalar(const Rational& q) : value(to_double(q)), exact(q) {}

std::string Scalar::text() const {
    if (exact) return exact->str();
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, r.ptr);
}

Scalar parse_number(const std::string& s, bool inexact) {
    static const std::regex rat(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
    std::smatch m;
    if (std::regex_match(s, m, rat)) {
        Rational num(m[1].str());
        if (m[2].matched) {
            Rational den(m[2].str());
            if (den == 0) throw ParameterError("zero denominator in '" + s + "'");
            num /= den;
        }
        return Scalar(num);
    }
    if (!inexact) throw ParameterError("'" + s + "' is not an exact rational p/q (pass --inexact to allow decimals)");
    double v = 0.0;
    const char* b = s.data();
    auto r = std::from_chars(b, b + s.size(), v);
    if (r.ec != std::errc() || r.ptr != b + s.size() || !std::isfinite(v))
        throw ParameterError("cannot parse number '" + s + "'");
    return Scalar(v);
}

std::string to_string(RegimeKind k) {
    switch (k) {
        case RegimeKind::holder: return "holder";
        case RegimeKind::theta_one: return "theta_one";
        case RegimeKind::linf: return "linf";
        case RegimeKind::general: return "general";
    }
    return "?";
}

Regime classify(const GnsParams& p) {
    check_d(p.d);
    if (!(p.t >= 1.0)) throw ParameterError("t must satisfy 1 <= t <= inf");
    const Q j = make(p.j), n = make(p.n), th = make(p.theta), d = make(p.d);
    const Q one{1.0, Rational(1)}, zero{0.0, Rational(0)};
    if (sign(j) < 0) throw ParameterError("invalid parameters: j >= 0 violated");
    if (sign(n) < 0) throw ParameterError("invalid parameters: n >= 0 violated");
    if (sign(th) < 0 || sign(one - th) < 0) throw ParameterError("invalid parameters: 0 <= theta <= 1 violated");
    const Q m = th * n - j;
    const double sc = std::max({1.0, j.v, n.v});
    if (sign(m, sc) < 0) throw ParameterError("invalid parameters: 0 <= theta*n - j violated");
    const Q gap = half(d) - m;
    if (sign(gap, sc) < 0) throw ParameterError("invalid parameters: theta*n - j <= d/2 violated");
    const bool theta_one = sign(one - th) == 0;
    if (theta_one && sign(n - j - half(d), sc) == 0)
        throw ParameterError("invalid parameters: theta != 1 required when n = j + d/2");

    Regime r;
    r.exact = j.q && n.q && th.q;
    if (sign(m, sc) == 0) r.kind = RegimeKind::holder;
    else if (theta_one) r.kind = RegimeKind::theta_one;
    else if (sign(gap, sc) == 0) r.kind = RegimeKind::linf;
    else r.kind = RegimeKind::general;

    r.plus = sign(gap, sc) > 0;
    r.plusplus = !theta_one;
    // 2j + d < 2n; j <= theta n and theta n - j <= d/2 already hold
    r.minusminus = sign(n) > 0 && sign(n - j, sc) >= 0 && sign(n + n - j - j - d, sc) > 0;

    // 1/r = 1/2 - m/d
    if (m.q) {
        r.inv_r = Rational(1, 2) - *m.q / p.d;
        r.r = r.inv_r->sign() == 0 ? kInfinity : to_double(1 / *r.inv_r);
    } else {
        double ir = 0.5 - m.v / p.d;
        if (sign(gap, sc) == 0) ir = 0.0;
        if (sign(m, sc) == 0) ir = 0.5;
        r.r = ir == 0.0 ? kInfinity : 1.0 / ir;
    }
    return r;
}

double gn_sobolev_factor(double theta, double t) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ParameterError("gn_sobolev_factor: theta must lie in [0, 1]");
    if (!(t >= 1.0)) throw ParameterError("gn_sobolev_factor: t must lie in [1, inf]");
    if (std::isinf(t)) return 1.0;
    // pow(0, 0) = 1 gives the 0^0 convention
    return std::pow(std::pow(1.0 - theta, 1.0 - theta) * std::pow(theta, theta), 1.0 / t);
}

SharpPair sharp_holder(double theta, double n) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ParameterError("theta must lie in [0, 1]");
    if (n < 0.0) throw ParameterError("n must be nonnegative");
    if (n == 0.0) return {1.0, 1.0 / std::numbers::sqrt2};
    return {1.0, sqrt_factor(theta)};
}

SharpPair sharp_theta1(double j, double n, int d) {
    check_d(d);
    if (!(j >= 0.0 && j <= n && n < j + 0.5 * d)) throw RegimeError("theta = 1 constant requires 0 <= j <= n < j + d/2");
    if (n == 0.0) return {1.0, 1.0 / std::numbers::sqrt2};
    const double g = gamma_m(n - j, d);
    return {g, g};
}

SharpLinf sharp_linf(double j, double n, int d) {
    check_d(d);
    if (!(n > 0.0) || j < 0.0) throw RegimeError("r = inf constant requires n > 0 and j >= 0");
    const double th = j / n + 0.5 * d / n;
    if (!(th < 1.0)) throw RegimeError("r = inf constant requires j/n + d/2n < 1");
    SharpLinf out;
    out.theta = th;
    const double den = std::pow(2.0, 0.5 * d) * std::pow(kPi, 0.25 * d - 0.5) *
                       std::sqrt(gamma_real(0.5 * d) * n * sin_pi(th));
    out.G = 1.0 / (den * sqrt_factor(th));
    out.S = sqrt_factor(th) * out.G;
    return out;
}

double optimal_lambda(double theta, double t, double norm_l2, double norm_dn, int d, double p, double q, double n) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ParameterError("optimal_lambda: theta must lie in [0, 1]");
    if (!(norm_l2 > 0.0 && norm_dn > 0.0)) throw ParameterError("optimal_lambda: norms must be positive");
    const double e = d / p - d / q + n;
    if (e == 0.0) throw ParameterError("optimal_lambda: d/p - d/q + n must be nonzero");
    if ((theta == 0.0 || theta == 1.0) && !std::isinf(t))
        throw LimitCaseError(theta == 0.0 ? "optimal_lambda: limit case theta = 0, lambda -> 0"
                                          : "optimal_lambda: limit case theta = 1, lambda -> inf");
    const double w = std::isinf(t) ? 1.0 : std::pow(theta / (1.0 - theta), 1.0 / t);
    return std::pow(w * norm_l2 / norm_dn, 1.0 / e);
}

SharpPair upper_plus(double j, double n, double theta, int d) {
    check_d(d);
    const double m = theta * n - j;
    if (!(m < 0.5 * d)) throw RegimeError("G+ requires theta*n - j < d/2");
    if (m < -kTol * std::max(1.0, n)) throw ParameterError("G+ requires theta*n >= j");
    const double g = gamma_m(std::max(m, 0.0), d);
    return {g, sqrt_factor(theta) * g};
}

double plusplus_e(double j, double n, double theta, int d) {
    // clamp: theta n - j can land a rounding step past d/2
    const double m = std::clamp(theta * n - j, 0.0, 0.5 * d);
    const double x = 2.0 * m / d;
    return std::pow(1.0 - x, 0.25 * d - 0.5 * m) / std::pow(1.0 + x, 0.25 * d + 0.5 * m);
}

double plusplus_f(double j, double n, double theta, int d) {
    const double m = theta * n - j;
    if (m <= 0.0) return sqrt_factor(theta);
    const double h = 0.5 * d;
    const double l = std::lgamma(h * (1.0 - theta) / m) + std::lgamma(h * theta / m) - std::log(n) -
                     std::lgamma(h) - std::lgamma(h / m);
    return std::exp((m / d) * l);
}

SharpPair upper_plusplus(double j, double n, double theta, int d) {
    check_d(d);
    if (!(theta < 1.0)) throw RegimeError("G++ requires theta < 1");
    if (theta < 0.0) throw ParameterError("theta must lie in [0, 1]");
    const double m = theta * n - j;
    if (m < -kTol * std::max(1.0, n) || m > 0.5 * d * (1.0 + kTol)) throw ParameterError("G++ requires 0 <= theta*n - j <= d/2");
    const double sf = sqrt_factor(theta);
    double g = 1.0;
    if (m > 0.0) g = plusplus_e(j, n, theta, d) * plusplus_f(j, n, theta, d) / (std::pow(kPi, 0.5 * m) * sf);
    return {g, sf * g};
}

int EpsGrid::size() const {
    if (!(step > 0.0 && lo >= kMinEps && hi >= lo)) throw ParameterError("eps grid needs 1e-3 <= lo <= hi and step > 0");
    return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double EpsGrid::at(int i) const { return lo + i * step; }

int default_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* e = std::getenv("GNS_THREADS")) {
        const int v = std::atoi(e);
        if (v >= 1) return std::min(v, hw);
    }
    return hw;
}

MinusResult lower_minus(double j, double n, double theta, int d, const QuadratureConfig& cfg, const EpsGrid& grid) {
    check_d(d);
    const int N = grid.size();
    int T = grid.threads > 0 ? grid.threads : default_threads();
    T = std::max(1, std::min(T, N));
    MinusTrial probe(j, n, theta, d, cfg);  // validates parameters up front

    std::vector<double> vals(N, 0.0);
    std::vector<std::exception_ptr> errs(T);
    auto work = [&](int w) {
        try {
            MinusTrial trial(j, n, theta, d, cfg);
            for (int i = w; i < N; i += T) vals[i] = trial.evaluate(grid.at(i)).G;
        } catch (...) {
            errs[w] = std::current_exception();
        }
    };
    if (T == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < T; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    // ascending scan with strict comparison: ties go to the smaller eps
    int best = 0;
    for (int i = 1; i < N; ++i)
        if (vals[i] > vals[best]) best = i;
    MinusResult out;
    out.G = vals[best];
    out.eps = grid.at(best);
    out.grid_points = N;
    if (grid.refine) {
        const double a = std::max(kMinEps, out.eps - grid.step), b = out.eps + grid.step;
        auto f = [&](double e) { return -probe.evaluate(e).G; };
        auto [e, v] = boost::math::tools::brent_find_minima(f, a, b, 30);
        if (-v > out.G) {
            out.G = -v;
            out.eps = e;
        }
    }
    out.S = sqrt_factor(theta) * out.G;
    return out;
}

AB ab_helpers(double j, double n, int d) {
    check_d(d);
    if (!(n > 0.0) || j < 0.0) throw RegimeError("A, B require n > 0 and j >= 0");
    const double th = j / n + 0.5 * d / n;
    if (!(th < 1.0)) throw RegimeError("A, B require j/n + d/2n < 1");
    const double c = std::pow(kPi, 0.5 * d + 1.0) / (gamma_real(0.5 * d) * n * sin_pi(th));
    return {c * (1.0 - th), c * th};
}

double l_norm(double j, double n, int d, double r, const QuadratureConfig& cfg) {
    const ProfileAB spec = l_profile_spec(j, n, d);
    const double l0 = profile_ab_at_zero(spec);
    if (std::isinf(r)) return std::abs(l0);  // nonnegative Fourier data
    if (!(r >= 2.0)) throw ParameterError("l_norm: r must be >= 2");
    if (r == 2.0) {
        // Plancherel: the Fourier data is x^{2j} / (1 + x^{2n})
        RadialProfile sq;
        sq.eval = [=](double x) {
            const double v = std::exp(2.0 * j * std::log(x)) / (1.0 + std::pow(x, 2.0 * n));
            return v * v;
        };
        sq.decay = DecayClass::algebraic(4.0 * (n - j));
        return std::sqrt(radial_integral(sq, d, cfg));
    }
    const RadialProfile g = fourier_profile(spec);
    const double abs_tol = 1e-13 * std::abs(l0);
    auto f = [&](double rho) {
        const double v = std::abs(hankel_inverse_ft_de(g, d, rho, abs_tol, cfg.rel_tol));
        return v == 0.0 ? 0.0 : std::exp((d - 1) * std::log(rho) + r * std::log(v));
    };
    auto res = quad::positive_axis(f, 1.0, 0.0, std::max(1e-10, cfg.rel_tol), cfg.max_panels);
    if (!res.converged) throw ToleranceError("l_norm: tolerance not reached");
    return std::pow(sphere_area(d) * res.value, 1.0 / r);
}

SharpPair lower_minusminus(double j, double n, double theta, int d, const QuadratureConfig& cfg) {
    check_d(d);
    if (!(n > 0.0) || j < 0.0 || j > n) throw RegimeError("G-- requires n > 0 and 0 <= j <= n");
    const double th0 = j / n + 0.5 * d / n;
    if (!(th0 < 1.0)) throw RegimeError("G-- requires j/n + d/2n < 1");
    const bool at_top = near(theta, th0);
    if ((theta < j / n && !near(theta, j / n)) || (theta > th0 && !at_top))
        throw RegimeError("G-- requires j/n <= theta <= j/n + d/2n");
    const double sf = sqrt_factor(theta);
    const double h = 0.5 * d;
    double I;
    double inv_r = 0.5 - (theta * n - j) / d;
    if (at_top) {
        I = kPi / (std::pow(2.0, h) * gamma_real(h) * n * sin_pi(th0));
    } else {
        if (near(theta * n - j, 0.0)) inv_r = 0.5;
        I = l_norm(j, n, d, 1.0 / inv_r, cfg);
    }
    const double s = I / std::pow(kPi, 0.25 * d + 0.5) *
                     std::sqrt(gamma_real(h) * n * sin_pi(th0) * sf * sf /
                               (std::pow(1.0 - th0, 1.0 - theta) * std::pow(th0, theta)));
    const double g = s / sf;
    return {g, sf * g};
}

double riesz_constant(double n, int d) {
    check_d(d);
    if (!(n > 0.0 && n < d)) throw ParameterError("Z_n requires 0 < n < d");
    return gamma_real(0.5 * (d - n)) / (std::pow(2.0, n) * std::pow(kPi, 0.5 * d) * gamma_real(0.5 * n));
}

double hls_constant(double n, int d) {
    check_d(d);
    if (!(n > 0.0 && n < 0.5 * d)) throw ParameterError("N_n requires 0 < n < d/2");
    const double h = 0.5 * d;
    const double l = 0.5 * (d - n) * std::log(kPi) + std::lgamma(0.5 * n) - std::lgamma(h - 0.5 * n) +
                     0.5 * (std::lgamma(h - n) - std::lgamma(h + n)) +
                     (n / d) * (std::lgamma(static_cast<double>(d)) - std::lgamma(h));
    return std::exp(l);
}

double hausdorff_young_constant(double p, int d) {
    check_d(d);
    if (!(p >= 1.0 && p <= 2.0)) throw ParameterError("Hausdorff-Young requires 1 <= p <= 2");
    const double ip = 1.0 / p, ipp = 1.0 - ip;
    const double ratio = std::pow(ipp, ipp) / std::pow(ip, ip);
    return std::pow(2.0 * kPi, -(d * ip - 0.5 * d)) * std::pow(ratio, 0.5 * d);
}

namespace {

// x^s h(x) with the decay class shifted accordingly
RadialProfile times_power(const RadialProfile& h, double s, bool squared) {
    RadialProfile p;
    const auto f = h.eval;
    p.eval = [f, s, squared](double x) {
        if (x <= 0.0) return 0.0;
        double v = f(x);
        if (squared) v *= v;
        return v == 0.0 ? 0.0 : v * std::pow(x, s);
    };
    p.decay = h.decay;
    if (h.decay.kind != DecayKind::exponential) p.decay.power = (squared ? 2.0 : 1.0) * h.decay.power - s;
    else if (squared) p.decay.rate = 2.0 * h.decay.rate;
    p.scale = h.scale;
    p.support = h.support;
    return p;
}

} // namespace

Rayleigh rayleigh_quotients(const RadialProfile& h, double j, double n, double theta, int d,
                            const QuadratureConfig& cfg) {
    check_d(d);
    if (!(theta >= 0.0 && theta <= 1.0)) throw ParameterError("theta must lie in [0, 1]");
    const double m = theta * n - j;
    if (m < -kTol * std::max(1.0, n) || m > 0.5 * d * (1.0 + kTol)) throw ParameterError("requires 0 <= theta*n - j <= d/2");
    double inv_r = 0.5 - m / d;
    if (std::abs(m) <= kTol * std::max(1.0, n)) inv_r = 0.5;
    if (std::abs(inv_r) <= kTol) inv_r = 0.0;

    const double U = std::sqrt(radial_integral(times_power(h, 0.0, true), d, cfg));
    const double V = std::sqrt(radial_integral(times_power(h, 2.0 * n, true), d, cfg));
    double Y;
    const double nu = 0.5 * d - 1.0;
    if (inv_r == 0.5) {
        Y = std::sqrt(radial_integral(times_power(h, 2.0 * j, true), d, cfg));
    } else {
        const RadialProfile dj = times_power(h, j, false);
        auto m0f = [&](double x) { return std::pow(x, d - 1) * dj.eval(x); };
        quad::Result r0 = dj.support ? quad::adaptive(m0f, dj.support->first, dj.support->second, 0.0, 1e-12, cfg.max_panels)
                                     : quad::positive_axis(m0f, dj.scale, 0.0, 1e-12, cfg.max_panels);
        if (!r0.converged) throw ToleranceError("rayleigh_quotients: transform at 0 did not converge");
        const double m0 = bessel_j_kernel(nu, 0.0) * r0.value;
        bool nonneg = true;
        for (int i = -60; i <= 60 && nonneg; ++i) nonneg = h.eval(h.scale * std::pow(10.0, 0.1 * i)) >= 0.0;
        auto M = [&](double rho) {
            if (rho == 0.0) return m0;
            if (dj.support) return hankel_inverse_ft(dj, d, rho, cfg);
            return hankel_inverse_ft_de(dj, d, rho, 1e-13 * std::abs(m0), cfg.rel_tol);
        };
        if (inv_r == 0.0) {
            if (nonneg) {
                Y = std::abs(m0);
            } else {
                RadialProfile mp;
                mp.eval = M;
                Y = sup_abs(mp, 50.0 / h.scale);
            }
        } else {
            const double r = 1.0 / inv_r;
            auto f = [&](double rho) {
                const double v = std::abs(M(rho));
                return v == 0.0 ? 0.0 : std::exp((d - 1) * std::log(rho) + r * std::log(v));
            };
            auto res = quad::positive_axis(f, 1.0 / h.scale, 0.0, std::max(1e-10, cfg.rel_tol), cfg.max_panels);
            if (!res.converged) throw ToleranceError("rayleigh_quotients: L^r norm did not converge");
            Y = std::pow(sphere_area(d) * res.value, inv_r);
        }
    }
    Rayleigh out;
    out.gn_ratio = Y / (std::pow(U, 1.0 - theta) * std::pow(V, theta));
    out.sobolev_ratio = Y / std::sqrt(U * U + V * V);
    return out;
}

Rayleigh rayleigh_quotients(const RadialProfile& h, const GnsParams& params, const QuadratureConfig& cfg) {
    classify(params);
    return rayleigh_quotients(h, params.j.value, params.n.value, params.theta.value, params.d, cfg);
}

BoundsReport best_bounds(const GnsParams& params, const QuadratureConfig& cfg, const BoundsOptions& opt) {
    BoundsReport rep;
    rep.params = params;
    rep.regime = classify(params);
    const double j = params.j.value, n = params.n.value, th = params.theta.value;
    const int d = params.d;
    const double sf = sqrt_factor(th);

    switch (rep.regime.kind) {
        case RegimeKind::holder: {
            auto s = sharp_holder(th, n);
            rep.exact_g = s.G;
            rep.exact_s = s.S;
            rep.exact_reason = "holder: j = theta*n";
            break;
        }
        case RegimeKind::theta_one: {
            auto s = sharp_theta1(j, n, d);
            rep.exact_g = s.G;
            rep.exact_s = s.S;
            rep.exact_reason = "theta_one: theta = 1";
            break;
        }
        case RegimeKind::linf: {
            auto s = sharp_linf(j, n, d);
            rep.exact_g = s.G;
            rep.exact_s = s.S;
            rep.exact_reason = "linf: theta = j/n + d/2n";
            break;
        }
        case RegimeKind::general: break;
    }
    if (rep.regime.plus) {
        auto b = upper_plus(j, n, th, d);
        rep.g_plus = b.G;
        rep.s_plus = b.S;
    }
    if (rep.regime.plusplus) {
        auto b = upper_plusplus(j, n, th, d);
        rep.g_plusplus = b.G;
        rep.s_plusplus = b.S;
    }
    if (rep.regime.minusminus) {
        auto b = lower_minusminus(j, n, th, d, cfg);
        rep.g_minusminus = b.G;
        rep.s_minusminus = b.S;
    }
    if (opt.minus && rep.regime.kind == RegimeKind::general && n > j) {
        auto b = lower_minus(j, n, th, d, cfg, opt.grid);
        rep.g_minus = b.G;
        rep.s_minus = b.S;
        rep.minus_eps = b.eps;
    }

    if (rep.exact_g) {
        rep.best_lower_g = rep.best_upper_g = *rep.exact_g;
        rep.best_lower_s = rep.best_upper_s = *rep.exact_s;
    } else {
        for (auto v : {rep.g_minus, rep.g_minusminus})
            if (v) rep.best_lower_g = std::max(rep.best_lower_g, *v);
        for (auto v : {rep.g_plus, rep.g_plusplus})
            if (v) rep.best_upper_g = std::min(rep.best_upper_g, *v);
        rep.best_lower_s = sf * rep.best_lower_g;
        rep.best_upper_s = sf * rep.best_upper_g;
    }
    const double slack = 1e-9 * std::max(1.0, rep.best_upper_g);
    if (rep.best_lower_g > rep.best_upper_g + slack)
        throw NumericalError("best lower bound exceeds best upper bound");
    return rep;
}

} // namespace gns
