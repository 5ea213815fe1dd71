#include "gns/radial.hpp"

#include "gns/errors.hpp"
#include "gns/quadrature.hpp"
#include "gns/special.hpp"

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

namespace gns {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(int d) {
    if (d < 1) throw ParameterError("dimension must be a positive integer");
}

void check_decay(const DecayClass& dc, double needed, const char* what) {
    if (dc.kind != DecayKind::exponential && !(dc.power > needed))
        throw DivergenceError(std::string(what) + ": profile decays too slowly to be integrable");
    if (dc.kind == DecayKind::exponential && !(dc.rate > 0.0))
        throw ParameterError(std::string(what) + ": exponential decay rate must be positive");
}

// k-th positive zero of J_nu, k >= 1
double bessel_zero(double nu, int k) {
    if (nu == -0.5) return (k - 0.5) * kPi;
    if (nu == 0.5) return k * kPi;
    return boost::math::cyl_bessel_j_zero(nu, k);
}

// Hankel's large-argument amplitudes: J_nu(x) = sqrt(2/(pi x)) (P cos w - Q sin w)
void hankel_pq(double nu, double x, double& P, double& Q) {
    const double m = 4.0 * nu * nu;
    P = 1.0;
    Q = 0.0;
    double term = 1.0, last = kInfinity;
    for (int k = 1; k < 60; ++k) {
        term *= (m - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
        const double a = std::abs(term);
        if (a == 0.0 || a > last) break;
        last = a;
        // signs: P gets (-1)^{k/2} for even k, Q gets (-1)^{(k-1)/2} for odd k
        const int s = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) P += s * term;
        else Q += s * term;
        if (a < 1e-17) break;
    }
}

// Ooura-Mori double-exponential rule for Int_0^inf f(x) cos(w x) dx (or sin), with the
// node tables built once and shared read-only. Each call starts at the coarsest level,
// so results do not depend on what was integrated before.
class FourierRule {
public:
    explicit FourierRule(bool sine) {
        using boost::math::quadrature::detail::calculate_ooura_alpha;
        using boost::math::quadrature::detail::ooura_cos_node_and_weight;
        using boost::math::quadrature::detail::ooura_sin_node_and_weight;
        const double roundoff = 0.5 * std::numeric_limits<double>::epsilon();
        for (int i = 0; i < kLevels; ++i) {
            const long double h = 1.0L / static_cast<long double>(1 << i);
            const long double alpha = calculate_ooura_alpha(h);
            auto nw = [&](long n) { return sine ? ooura_sin_node_and_weight(n, h, alpha) : ooura_cos_node_and_weight(n, h, alpha); };
            std::vector<std::pair<double, double>> row;
            double wmax = 1.0, w = 0.0;
            long n = 0;
            do {
                const auto p = nw(n++);
                w = static_cast<double>(p.second);
                row.emplace_back(static_cast<double>(p.first), w);
                wmax = std::max(wmax, std::abs(w));
            } while (std::abs(w) > roundoff * wmax);
            n = -1;
            do {
                const auto p = nw(n--);
                const double x = static_cast<double>(p.first);
                if (std::isnan(x) || (sine ? x <= 0.0 : x < 0.0)) break;
                if (!row.empty() && row.back().first == x) break;
                w = static_cast<double>(p.second);
                row.emplace_back(x, w);
                wmax = std::max(wmax, std::abs(w));
            } while (std::abs(w) > std::numeric_limits<double>::min() * wmax);
            levels_.push_back(std::move(row));
        }
    }

    // throws ToleranceError when the finest level still disagrees with the previous one
    template <class F>
    double integrate(F&& f, double omega, double rel_tol, double abs_tol) const {
        double prev = 0.0;
        for (int i = 0; i < kLevels; ++i) {
            double s = 0.0;
            for (const auto& [x, w] : levels_[i]) s += f(x / omega) * w;
            s /= omega;
            if (i > 0 && std::abs(s - prev) <= std::max(rel_tol * std::abs(s), abs_tol)) return s;
            prev = s;
        }
        throw ToleranceError("oscillatory transform: levels exhausted before convergence");
    }

    static const FourierRule& cosine() {
        static const FourierRule r(false);
        return r;
    }
    static const FourierRule& sine() {
        static const FourierRule r(true);
        return r;
    }

private:
    static constexpr int kLevels = 11;
    std::vector<std::vector<std::pair<double, double>>> levels_;
};

} // namespace

double sphere_area(int d) {
    check_dim(d);
    return 2.0 * std::pow(kPi, 0.5 * d) / gamma_real(0.5 * d);
}

double radial_integral(const RadialProfile& g, int d, const QuadratureConfig& cfg) {
    cfg.validate();
    check_dim(d);
    check_decay(g.decay, d, "radial_integral");
    const double dm1 = d - 1;
    auto f = [&](double x) { return (d == 1 ? 1.0 : std::pow(x, dm1)) * g.eval(x); };
    if (g.support) {
        auto r = quad::adaptive(f, g.support->first, g.support->second, cfg.abs_tol, cfg.rel_tol, cfg.max_panels);
        if (!r.converged) throw ToleranceError("radial_integral: tolerance not reached");
        return sphere_area(d) * r.value;
    }
    auto r = quad::positive_axis(f, g.scale, cfg.abs_tol, cfg.rel_tol, cfg.max_panels);
    if (!r.converged) throw ToleranceError("radial_integral: tolerance not reached");
    return sphere_area(d) * r.value;
}

double beta_integral(double a, double b, double u) {
    if (!(b > a && a > 0.0 && u > 0.0)) throw ParameterError("beta_integral requires b > a > 0 and u > 0");
    const double s = a * u / b;
    return std::exp(std::lgamma(s) + std::lgamma(u - s) - std::lgamma(u)) / (2.0 * b);
}

double beta_integral_integer(double a, double b, int u) {
    if (!(b > a && a > 0.0 && u >= 1)) throw ParameterError("beta_integral_integer requires b > a > 0 and u >= 1");
    const double x = a * u / b;
    double fact = 1.0;
    for (int i = 2; i < u; ++i) fact *= i;
    const double m = std::round(x);
    if (std::abs(x - m) < 1e-12 && m >= 1.0 && m <= u - 1) {
        // removable 0/0: drop the vanishing factor of the Pochhammer symbol against sin
        const int mi = static_cast<int>(m);
        double prod = 1.0;
        for (int i = 0; i <= u - 2; ++i)
            if (i != mi - 1) prod *= 1.0 - m + i;
        const double sign = (mi % 2 == 1) ? 1.0 : -1.0;
        return sign * prod / (2.0 * b * fact);
    }
    return kPi * pochhammer(1.0 - x, static_cast<unsigned>(u - 1)) / (2.0 * b * fact * sin_pi(x));
}

double i_jn(double j, double n, int d) {
    check_dim(d);
    if (!(n > 0.0) || j < 0.0) throw ParameterError("i_jn requires n > 0 and j >= 0");
    const double th = j / n + 0.5 * d / n;
    if (th >= 1.0) throw DivergenceError("i_jn: j/n + d/2n >= 1, the integral diverges");
    return std::pow(kPi, 0.5 * d + 1.0) / (gamma_real(0.5 * d) * n * sin_pi(th));
}

double hankel_inverse_ft(const RadialProfile& g, int d, double rho, const QuadratureConfig& cfg) {
    cfg.validate();
    check_dim(d);
    if (rho < 0.0) throw ParameterError("hankel_inverse_ft: rho must be nonnegative");
    const double nu = 0.5 * d - 1.0;
    const double dm1 = d - 1;
    auto weight = [&](double x) { return d == 1 ? 1.0 : std::pow(x, dm1); };
    if (rho == 0.0) {
        check_decay(g.decay, d, "hankel_inverse_ft");
        auto f = [&](double x) { return weight(x) * g.eval(x); };
        auto r = quad::positive_axis(f, g.scale, cfg.abs_tol, cfg.rel_tol, cfg.max_panels);
        if (!r.converged) throw ToleranceError("hankel_inverse_ft: tolerance not reached at rho = 0");
        return bessel_j_kernel(nu, 0.0) * r.value;
    }
    check_decay(g.decay, 0.5 * (d - 1), "hankel_inverse_ft");

    auto f = [&](double x) {
        const double v = g.eval(x);
        return v == 0.0 ? 0.0 : weight(x) * v * bessel_j_kernel(nu, rho * x);
    };
    // up to the first zero of the kernel: log-spaced panels resolve x -> 0 behaviour and small scales
    const double x1 = bessel_zero(nu, 1) / rho;
    auto head = quad::positive_axis(f, std::min(g.scale, x1), 0.1 * cfg.abs_tol, 0.1 * cfg.rel_tol,
                                    cfg.max_panels, 1.0, x1);
    double total = head.value;
    bool ok = head.converged;

    const bool expo = g.decay.kind == DecayKind::exponential;
    const int m = std::max(3, cfg.osc_accel_terms);
    std::vector<double> sums{total};
    double prev_est = total, prev_diff = kInfinity;
    int quiet = 0;
    double a = x1;
    for (int k = 1; k <= cfg.max_panels; ++k) {
        const double b = bessel_zero(nu, k + 1) / rho;
        auto p = quad::adaptive(f, a, b, 0.05 * cfg.abs_tol, 0.05 * cfg.rel_tol, 60);
        ok = ok && p.converged;
        total += p.value;
        a = b;
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (expo) {
            if (std::abs(p.value) < 1e-3 * tol && b > g.scale) {
                if (++quiet >= 3) {
                    if (!ok) throw ToleranceError("hankel_inverse_ft: panel tolerance not reached");
                    return total;
                }
            } else {
                quiet = 0;
            }
            continue;
        }
        sums.push_back(total);
        // no extrapolation before the sweep has passed the bulk of g
        if (sums.size() < 6 || b < 2.0 * g.scale) continue;
        const std::size_t start = sums.size() > static_cast<std::size_t>(m) ? sums.size() - m : 0;
        std::vector<double> tail(sums.begin() + static_cast<std::ptrdiff_t>(start), sums.end());
        const double est = quad::wynn_epsilon(tail);
        const double diff = std::abs(est - prev_est);
        const double tol_e = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(est));
        if (diff < tol_e && prev_diff < tol_e) return est;
        prev_diff = diff;
        prev_est = est;
    }
    throw ToleranceError("hankel_inverse_ft: oscillatory tail did not converge within max_panels");
}

double hankel_inverse_ft_de(const RadialProfile& g, int d, double rho, double abs_tol, double rel_tol) {
    check_dim(d);
    if (rho < 0.0) throw ParameterError("hankel_inverse_ft_de: rho must be nonnegative");
    const double nu = 0.5 * d - 1.0;
    const double rt = std::max(rel_tol, 1e-13);
    auto moment = [&](double upper, double r) {
        auto f = [&](double x) {
            const double v = g.eval(x);
            return v == 0.0 ? 0.0 : std::pow(x, d - 1) * v * bessel_j_kernel(nu, r * x);
        };
        auto res = quad::positive_axis(f, std::min(g.scale, upper), abs_tol, std::max(rel_tol, 1e-10), 20000, 1.0, upper);
        if (!res.converged) throw ToleranceError("hankel_inverse_ft_de: tolerance not reached");
        return res.value;
    };
    if (rho == 0.0) {
        check_decay(g.decay, d, "hankel_inverse_ft_de");
        return moment(kInfinity, 0.0);
    }
    check_decay(g.decay, 0.5 * (d - 1), "hankel_inverse_ft_de");
    const auto& cr = FourierRule::cosine();
    const auto& sr = FourierRule::sine();
    const double k = std::sqrt(2.0 / kPi);
    // at tiny rho the mass of g sits where the DE nodes are sparse; split instead
    const bool split = rho * g.scale < 1e-2;
    // singular data near 0 can stall the one-shot rules; the split below copes
    try {
        if (d == 1 && !split) {
            auto f = [&](double x) { return g.eval(x); };
            return k * cr.integrate(f, rho, rt, abs_tol / k);
        }
        if (d == 3 && !split) {
            auto f = [&](double x) { return x * g.eval(x); };
            return k / rho * sr.integrate(f, rho, rt, abs_tol * rho / k);
        }
    } catch (const ToleranceError&) {
    }
    // head up to x0/rho directly, tail through the asymptotic amplitudes of J_nu
    const double x0 = 20.0 + nu * nu;
    const double a = x0 / rho;
    const double head = moment(a, rho);
    const double w0 = x0 - 0.5 * nu * kPi - 0.25 * kPi;
    const double c0 = std::cos(w0), s0 = std::sin(w0);
    auto amp = [&](double s, bool cos_part) {
        const double x = a + s;
        const double v = g.eval(x);
        if (v == 0.0) return 0.0;
        const double t = rho * x;
        double P, Q;
        hankel_pq(nu, t, P, Q);
        const double W = std::pow(x, d - 1) * v * std::pow(t, -nu) * std::sqrt(2.0 / (kPi * t));
        return cos_part ? W * (P * c0 - Q * s0) : -W * (P * s0 + Q * c0);
    };
    return head + cr.integrate([&](double s) { return amp(s, true); }, rho, rt, 0.25 * abs_tol) +
           sr.integrate([&](double s) { return amp(s, false); }, rho, rt, 0.25 * abs_tol);
}

double sup_abs(const RadialProfile& f, double rho_max) {
    auto absf = [&](double x) { return std::abs(f(x)); };
    std::vector<double> xs{0.0};
    const int n = 256;
    for (int i = 0; i < n - 1; ++i) xs.push_back(rho_max * std::pow(1e-6, 1.0 - static_cast<double>(i) / (n - 2)));
    std::vector<double> vs;
    vs.reserve(xs.size());
    for (double x : xs) vs.push_back(x == 0.0 && !f.value_at_zero ? absf(1e-12 * rho_max) : absf(x));

    std::vector<std::size_t> idx(xs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::partial_sort(idx.begin(), idx.begin() + 3, idx.end(), [&](auto p, auto q) { return vs[p] > vs[q]; });
    double best = vs[idx[0]];
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int t = 0; t < 3; ++t) {
        const std::size_t i = idx[t];
        double lo = xs[i == 0 ? 0 : i - 1], hi = xs[std::min(i + 1, xs.size() - 1)];
        double c = hi - g * (hi - lo), e = lo + g * (hi - lo);
        double fc = absf(c), fe = absf(e);
        for (int it = 0; it < 60 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
            if (fc > fe) {
                hi = e;
                e = c;
                fe = fc;
                c = hi - g * (hi - lo);
                fc = absf(c);
            } else {
                lo = c;
                c = e;
                fc = fe;
                e = lo + g * (hi - lo);
                fe = absf(e);
            }
        }
        best = std::max({best, fc, fe});
    }
    return best;
}

double lr_norm_radial(const RadialProfile& f, double r, int d, const QuadratureConfig& cfg) {
    cfg.validate();
    check_dim(d);
    if (!(r >= 1.0)) throw ParameterError("lr_norm_radial: r must be >= 1");
    if (std::isinf(r)) {
        if (f.nonneg_fourier && f.value_at_zero) return std::abs(*f.value_at_zero);
        double rho_max = f.scale * 1e4;
        if (f.decay.kind == DecayKind::exponential) rho_max = f.scale * 50.0 / f.decay.rate;
        return sup_abs(f, rho_max);
    }
    check_decay(f.decay, d / r, "lr_norm_radial");
    const double dm1 = d - 1;
    auto g = [&](double x) {
        const double v = std::abs(f.eval(x));
        return v == 0.0 ? 0.0 : std::exp(dm1 * std::log(x) + r * std::log(v));
    };
    auto res = quad::positive_axis(g, f.scale, cfg.abs_tol, cfg.rel_tol, cfg.max_panels);
    if (!res.converged) throw ToleranceError("lr_norm_radial: tolerance not reached");
    return std::pow(sphere_area(d) * res.value, 1.0 / r);
}

MacdonaldAdmissibility macdonald_admissibility(double mu, double sigma, int d) {
    return {std::abs(mu) + sigma < d, 2.0 * (std::abs(mu) + sigma) < d};
}

double macdonald_transform(double mu, double sigma, int d, double rho) {
    check_dim(d);
    if (!macdonald_admissibility(mu, sigma, d).l1)
        throw ParameterError("macdonald_transform requires |mu| + sigma < d");
    if (rho < 0.0) throw ParameterError("macdonald_transform: rho must be nonnegative");
    const double h = 0.5 * d;
    const double p = 0.5 * mu, q = 0.5 * sigma;
    const double pre = gamma_real(h + p - q) * gamma_real(h - p - q) /
                       (std::pow(2.0, sigma + 1.0 - h) * gamma_real(h));
    if (std::abs(std::abs(mu) - sigma) < 1e-15) return pre * std::pow(1.0 + rho * rho, -(h - mu));
    return pre * hyp2f1_neg(h + p - q, h - p - q, h, rho * rho);
}

} // namespace gns
