#include "gns/profiles.hpp"

#include "gns/errors.hpp"
#include "gns/format.hpp"
#include "gns/special.hpp"

#include <cmath>
#include <numeric>
#include <numbers>

namespace gns {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

Method parse_method(const std::string& s) {
    if (s == "quadrature") return Method::quadrature;
    if (s == "fox_h") return Method::fox_h;
    if (s == "meijer_g") return Method::meijer_g;
    if (s == "auto" || s == "automatic") return Method::automatic;
    throw ParameterError("unknown method '" + s + "' (quadrature, fox_h, meijer_g, auto)");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::quadrature: return "quadrature";
        case Method::fox_h: return "fox_h";
        case Method::meijer_g: return "meijer_g";
        case Method::automatic: return "auto";
    }
    return "?";
}

void validate(const ProfileAB& p) {
    if (p.d < 1) throw ParameterError("profile: dimension must be positive");
    if (!(p.b > p.a && p.a > 0.0)) throw ParameterError("profile: requires b > a > 0");
}

RadialProfile fourier_profile(const ProfileAB& p) {
    validate(p);
    const double e = 2.0 * p.a - p.d, tb = 2.0 * p.b;
    RadialProfile g;
    g.eval = [e, tb](double x) {
        if (x <= 0.0) return 0.0;
        const double lx = std::log(x);
        // x^e / (1 + x^{2b}) without overflow for large x
        if (tb * lx > 40.0) return std::exp((e - tb) * lx) / (1.0 + std::exp(-tb * lx));
        return std::exp(e * lx) / (1.0 + std::exp(tb * lx));
    };
    g.decay = DecayClass::algebraic(tb - e);
    g.scale = 1.0;
    g.nonneg_fourier = true;
    return g;
}

double profile_ab_at_zero(const ProfileAB& p) {
    validate(p);
    return kPi / (std::pow(2.0, 0.5 * p.d) * gamma_real(0.5 * p.d) * p.b * sin_pi(p.a / p.b));
}

std::optional<std::pair<int, int>> small_fraction(double x, int max_den) {
    if (!(x > 0.0)) return std::nullopt;
    for (int m = 1; m <= max_den; ++m) {
        const double nn = std::round(x * m);
        if (nn >= 1.0 && std::abs(nn / m - x) < 1e-12 * std::max(1.0, x)) {
            const int N = static_cast<int>(nn);
            if (std::gcd(N, m) == 1) return std::make_pair(N, m);
        }
    }
    return std::nullopt;
}

HProfileSpec h_spec_for_profile(const ProfileAB& p) {
    validate(p);
    const double q = 1.0 - p.a / p.b, s = 1.0 / p.b;
    HProfileSpec out;
    out.spec.upper_left = {{q, s}};
    out.spec.lower_left = {{0.0, 1.0}, {q, s}};
    out.spec.lower_right = {{1.0 - 0.5 * p.d, 1.0}};
    out.prefactor = 1.0 / (std::pow(2.0, 0.5 * p.d) * p.b);
    return out;
}

double GProfileSpec::argument(double rho) const { return std::pow(rho / (2.0 * N), 2.0 * N); }

std::string GProfileSpec::to_string() const {
    std::string g = gns::to_string(spec);
    g.pop_back();
    const std::string m = std::to_string(2 * N);
    return format_constant(prefactor) + " " + g + " | (rho/" + m + ")^" + m + ")";
}

GProfileSpec g_spec_for_profile(const ProfileAB& p, int N, int M) {
    validate(p);
    if (N < 1 || M < 1) throw ParameterError("g_spec_for_profile: N, M must be positive");
    if (std::abs(p.b - static_cast<double>(N) / M) > 1e-12 * p.b)
        throw ParameterError("g_spec_for_profile: b must equal N/M");
    GFunctionSpec g;
    for (int l = 1; l <= M; ++l) g.a.push_back(1.0 - p.a / N - static_cast<double>(l - 1) / M);
    for (int h = 1; h <= N; ++h) g.b.push_back(static_cast<double>(h - 1) / N);
    for (int h = 1; h <= M; ++h) g.b.push_back(-p.a / N + static_cast<double>(h) / M);
    for (int l = 1; l <= N; ++l) g.b_star.push_back(1.0 - 0.5 * p.d / N - static_cast<double>(l - 1) / N);
    GProfileSpec out;
    out.spec = simplify_g(g);
    out.N = N;
    out.M = M;
    out.prefactor = M / (std::pow(2.0, 0.5 * p.d + M - 1) * std::pow(kPi, M - 1) * std::pow(N, 0.5 * p.d));
    return out;
}

double profile_ab(const ProfileAB& p, double rho, Method method, const QuadratureConfig& cfg) {
    validate(p);
    if (rho < 0.0) throw ParameterError("profile_ab: rho must be nonnegative");
    if (method == Method::automatic) {
        auto f = small_fraction(p.b, 12);
        method = f ? Method::meijer_g : Method::fox_h;
    }
    switch (method) {
        case Method::quadrature: return hankel_inverse_ft(fourier_profile(p), p.d, rho, cfg);
        case Method::fox_h: {
            const auto h = h_spec_for_profile(p);
            if (rho == 0.0) return h.prefactor * eval_h_at_zero(h.spec, cfg);
            return h.prefactor * eval_h(h.spec, h.argument(rho), cfg);
        }
        case Method::meijer_g: {
            auto f = small_fraction(p.b, 1000);
            if (!f) throw ParameterError("profile_ab: meijer_g needs a rational b = N/M");
            const auto g = g_spec_for_profile(p, f->first, f->second);
            if (rho == 0.0) return g.prefactor * eval_g_at_zero(g.spec, cfg);
            return g.prefactor * eval_g(g.spec, g.argument(rho), cfg);
        }
        case Method::automatic: break;
    }
    throw ParameterError("profile_ab: unknown method");
}

ProfileAB linf_profile(double j, double n, int d) {
    if (!(n > 0.0) || j < 0.0) throw RegimeError("F_jn requires n > 0 and j >= 0");
    if (!(j / n + 0.5 * d / n < 1.0)) throw RegimeError("F_jn requires j/n + d/2n < 1");
    return {0.5 * (j + d), n, d};
}

double f_linf(double j, double n, int d, double rho, Method method, const QuadratureConfig& cfg) {
    return profile_ab(linf_profile(j, n, d), rho, method, cfg);
}

ProfileAB l_profile_spec(double j, double n, int d) {
    if (!(n > 0.0) || j < 0.0) throw RegimeError("L_jn requires n > 0 and j >= 0");
    if (!(j / n + 0.5 * d / n < 1.0)) throw RegimeError("L_jn requires j/n + d/2n < 1");
    return {j + 0.5 * d, n, d};
}

double l_profile(double j, double n, int d, double rho, Method method, const QuadratureConfig& cfg) {
    return profile_ab(l_profile_spec(j, n, d), rho, method, cfg);
}

Theta1Membership theta1_membership(double j, double n, int d) {
    return {n < 0.5 * j + 0.5 * d, n < 0.5 * j + 0.25 * d};
}

double theta1_maximizer(double j, double n, int d, double rho) {
    if (d < 1) throw ParameterError("dimension must be positive");
    if (!(j >= 0.0 && j <= n && n < j + 0.5 * d))
        throw RegimeError("theta = 1 maximizer requires 0 <= j <= n < j + d/2");
    if (!theta1_membership(j, n, d).linf)
        throw RegimeError("theta = 1 maximizer: no closed form for n >= j/2 + d/2");
    if (rho < 0.0) throw ParameterError("rho must be nonnegative");
    const double h = 0.5 * d;
    if (j == 0.0) return std::pow(1.0 + rho * rho, -(h - n));
    const double pre = gamma_real(h - 0.5 * j) * gamma_real(h - n + 0.5 * j) /
                       (std::pow(2.0, j) * gamma_real(h) * gamma_real(h - n + j));
    return pre * hyp2f1_neg(h - 0.5 * j, h - n + 0.5 * j, h, rho * rho);
}

namespace {

void check_trial(double j, double n, double eps) {
    if (!(j >= 0.0 && n >= j)) throw ParameterError("trial profile requires n >= j >= 0");
    if (!(eps >= kMinEps)) throw ParameterError("trial profile requires eps >= 1e-3");
}

// x^p K_mu(x) / (x^2 + eps^2)^q
RadialProfile k_profile(double p, double mu, double q, double eps) {
    RadialProfile g;
    const double lead = mu > 0.0 ? std::pow(2.0, mu - 1.0) * gamma_real(mu) : 0.0;
    g.eval = [=](double x) {
        if (x <= 0.0) return 0.0;
        // x^mu K_mu(x) -> 2^{mu-1} Gamma(mu); avoids overflow of K for tiny x
        if (mu > 0.0 && x < 1e-8) return lead * std::exp((p - mu) * std::log(x) - q * std::log(x * x + eps * eps));
        const double k = bessel_k(mu, x);
        if (k == 0.0) return 0.0;
        return k * std::exp(p * std::log(x) - q * std::log(x * x + eps * eps));
    };
    g.decay = DecayClass::exponential(1.0);
    g.scale = 1.0;
    g.nonneg_fourier = false;
    if (mu > 0.0 && p == mu) g.value_at_zero = std::pow(2.0, mu - 1.0) * gamma_real(mu) / std::pow(eps, 2.0 * q);
    if (mu == 0.0 && p > 0.0) g.value_at_zero = 0.0;
    if (p > mu) g.value_at_zero = 0.0;
    return g;
}

} // namespace

RadialProfile trial_minus_fourier(double j, double n, double eps) {
    check_trial(j, n, eps);
    return k_profile(n - j, n - j, n - 0.5 * j, eps);
}

RadialProfile trial_minus_dj_fourier(double j, double n, double eps) {
    check_trial(j, n, eps);
    return k_profile(n, n - j, n - 0.5 * j, eps);
}

double m_profile(double j, double n, double eps, int d, double rho, const QuadratureConfig& cfg) {
    return hankel_inverse_ft(trial_minus_dj_fourier(j, n, eps), d, rho, cfg);
}

} // namespace gns
