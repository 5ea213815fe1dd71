#include "gns/mellin_barnes.hpp"

#include "gns/errors.hpp"
#include "gns/format.hpp"
#include "gns/quadrature.hpp"
#include "gns/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace gns {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxHeight = 400.0;
constexpr double kPanelHeight = 2.0;

void check_scales(const HFunctionSpec& s) {
    for (const auto* g : {&s.upper_left, &s.upper_right, &s.lower_left, &s.lower_right})
        for (const auto& p : *g)
            if (!(p.scale > 0.0)) throw ParameterError("H-function scale factors must be positive");
}

double max_left(const HFunctionSpec& s) {
    double m = -kInf;
    for (const auto& p : s.upper_left) m = std::max(m, (p.p - 1.0) / p.scale);
    return m;
}

double min_right(const HFunctionSpec& s) {
    double m = kInf;
    for (const auto& p : s.lower_left) m = std::min(m, p.p / p.scale);
    return m;
}

std::vector<double> first_unique(std::vector<double> v, int count, bool descending) {
    if (descending)
        std::sort(v.begin(), v.end(), std::greater<>());
    else
        std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
        if (!out.empty() && std::abs(out.back() - x) <= 1e-12 * std::max(1.0, std::abs(x))) continue;
        out.push_back(x);
        if (static_cast<int>(out.size()) == count) break;
    }
    return out;
}

// power of |t| in the large-|t| modulus of the integrand on Re s = c
double envelope_power(const HFunctionSpec& s, double c) {
    double p = 0.0;
    for (const auto& g : s.upper_left) p += 0.5 - g.p + g.scale * c;
    for (const auto& g : s.lower_left) p += g.p - g.scale * c - 0.5;
    for (const auto& g : s.upper_right) p -= g.p - g.scale * c - 0.5;
    for (const auto& g : s.lower_right) p -= 0.5 - g.p + g.scale * c;
    return p;
}

double contour_for(const HFunctionSpec& spec, double z) {
    const double lo = max_left(spec), hi = min_right(spec);
    if (lo >= hi) throw ParameterError("inseparable poles: left and right pole sets overlap");
    const double lz = std::log(z);
    if (!std::isfinite(lo) && !std::isfinite(hi)) return 0.0;
    if (!std::isfinite(lo)) return hi - std::clamp(1.0 / std::max(std::abs(lz), 1e-3), 0.05, 0.5);
    if (!std::isfinite(hi)) return lo + std::clamp(1.0 / std::max(std::abs(lz), 1e-3), 0.05, 0.5);
    const double gap = hi - lo;
    if (std::abs(lz) < 1e-12) return 0.5 * (lo + hi);
    const double delta = std::clamp(1.0 / std::abs(lz), 0.05 * gap, 0.5 * gap);
    return lz < 0.0 ? hi - delta : lo + delta;
}

bool equal_params(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x)); }

std::string join(const std::vector<double>& v) {
    if (v.empty()) return "—";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += format_fraction(v[i]);
    }
    return s;
}

std::string join(const std::vector<GammaPair>& v) {
    if (v.empty()) return "—";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += "(" + format_fraction(v[i].p) + ", " + format_fraction(v[i].scale) + ")";
    }
    return s;
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw ParameterError("quadrature tolerances must be positive");
    if (max_panels < 16) throw ParameterError("max_panels must be at least 16");
    if (osc_accel_terms < 3) throw ParameterError("osc_accel_terms must be at least 3");
    if (!(truncation_safety >= 1.0)) throw ParameterError("truncation_safety must be >= 1");
}

HFunctionSpec lift(const GFunctionSpec& g) {
    HFunctionSpec h;
    for (double x : g.a) h.upper_left.push_back({x, 1.0});
    for (double x : g.a_star) h.upper_right.push_back({x, 1.0});
    for (double x : g.b) h.lower_left.push_back({x, 1.0});
    for (double x : g.b_star) h.lower_right.push_back({x, 1.0});
    return h;
}

std::vector<double> left_poles(const HFunctionSpec& spec, int count) {
    check_scales(spec);
    std::vector<double> all;
    for (const auto& g : spec.upper_left)
        for (int k = 0; k < count; ++k) all.push_back((-1.0 + g.p - k) / g.scale);
    return first_unique(std::move(all), count, true);
}

std::vector<double> right_poles(const HFunctionSpec& spec, int count) {
    check_scales(spec);
    std::vector<double> all;
    for (const auto& g : spec.lower_left)
        for (int k = 0; k < count; ++k) all.push_back((g.p + k) / g.scale);
    return first_unique(std::move(all), count, false);
}

double alpha(const HFunctionSpec& s) {
    double a = 0.0;
    for (const auto& g : s.upper_left) a += g.scale;
    for (const auto& g : s.upper_right) a -= g.scale;
    for (const auto& g : s.lower_left) a += g.scale;
    for (const auto& g : s.lower_right) a -= g.scale;
    return a;
}

double alpha(const GFunctionSpec& s) {
    return static_cast<double>(s.a.size()) - static_cast<double>(s.a_star.size()) +
           static_cast<double>(s.b.size()) - static_cast<double>(s.b_star.size());
}

double choose_contour(const HFunctionSpec& spec) {
    check_scales(spec);
    const double lo = max_left(spec), hi = min_right(spec);
    if (lo >= hi) throw ParameterError("inseparable poles: left and right pole sets overlap");
    if (std::isfinite(lo) && std::isfinite(hi)) return 0.5 * (lo + hi);
    if (std::isfinite(hi)) return hi - 0.5;
    if (std::isfinite(lo)) return lo + 0.5;
    return 0.0;
}

std::complex<double> log_integrand(const HFunctionSpec& spec, std::complex<double> s, double log_z) {
    std::complex<double> r = s * log_z;
    for (const auto& g : spec.upper_left) r += log_gamma_vertical(1.0 - g.p + g.scale * s);
    for (const auto& g : spec.lower_left) r += log_gamma_vertical(g.p - g.scale * s);
    for (const auto& g : spec.upper_right) r -= log_gamma_vertical(g.p - g.scale * s);
    for (const auto& g : spec.lower_right) r -= log_gamma_vertical(1.0 - g.p + g.scale * s);
    return r;
}

ContourEval eval_h_detailed(const HFunctionSpec& spec, double z, const QuadratureConfig& cfg,
                            std::optional<double> abscissa) {
    cfg.validate();
    check_scales(spec);
    if (!(z > 0.0)) throw ParameterError("eval_h: z must be positive");
    const double a = alpha(spec);
    if (!(a > 0.0)) throw ParameterError("eval_h: alpha must be positive");
    const double lo = max_left(spec), hi = min_right(spec);
    if (lo >= hi) throw ParameterError("inseparable poles: left and right pole sets overlap");
    const double c = abscissa ? *abscissa : contour_for(spec, z);
    if (!(c > lo && c < hi)) throw ParameterError("eval_h: abscissa outside the pole gap");

    const double lz = std::log(z);
    auto phi = [&](double t) {
        const std::complex<double> lp = log_integrand(spec, {c, t}, lz);
        const std::complex<double> lm = log_integrand(spec, {c, -t}, lz);
        if (lp.real() > 700.0 || lm.real() > 700.0) throw NumericalError("eval_h: integrand overflow");
        return std::exp(lp) + std::exp(lm);
    };
    auto modulus = [&](double t) { return std::exp(log_integrand(spec, {c, t}, lz).real()); };

    const double kappa = 0.5 * kPi * a;
    const double power = envelope_power(spec, c);
    ContourEval out;
    out.abscissa = c;
    std::complex<double> total(0.0, 0.0);
    double sum_abs = 0.0;
    double t = 0.0;
    for (;;) {
        const double tol_now = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total.real())) * 2.0 * kPi;
        auto p = quad::adaptive_any(phi, t, t + kPanelHeight, 0.1 * tol_now, 0.1 * cfg.rel_tol, 400);
        out.evals += 2 * p.evals;
        total += p.value;
        sum_abs += std::abs(p.value);
        t += kPanelHeight;
        const double rate = kappa - power / t;
        if (rate > 0.5 * kappa) {
            const double tail = 2.0 * modulus(t) / rate;
            const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total.real())) * 2.0 * kPi;
            if (cfg.truncation_safety * tail < tol) break;
        }
        if (t >= kMaxHeight)
            throw ToleranceError("eval_h: tolerance not reached within |Im s| <= 400");
    }
    out.height = t;
    out.value = total.real() / (2.0 * kPi);
    out.imag_residue = total.imag() / (2.0 * kPi);
    return out;
}

double eval_h(const HFunctionSpec& spec, double z, const QuadratureConfig& cfg) {
    return eval_h_detailed(spec, z, cfg).value;
}

double eval_g(const GFunctionSpec& spec, double z, const QuadratureConfig& cfg) {
    return eval_h(lift(spec), z, cfg);
}

double eval_h_at_zero(const HFunctionSpec& spec, const QuadratureConfig& cfg) {
    cfg.validate();
    const std::vector<double> r = right_poles(spec, 1);
    if (r.empty()) throw ParameterError("eval_h_at_zero: no right poles");
    if (r[0] > 1e-12) return 0.0;
    if (r[0] < -1e-12) throw DivergenceError("eval_h_at_zero: H(z) diverges as z -> 0");
    // z^s -> 0 for Re s > 0, so only the pole at s = 0 survives; it must be simple
    auto at_zero = [](const GammaPair& g) { return std::abs(g.p) < 1e-12; };
    int order = 0;
    double residue = 1.0;
    for (const auto& g : spec.lower_left) {
        if (at_zero(g)) {
            ++order;
            residue /= g.scale;  // Gamma(-B s) ~ -1/(B s), closing to the right flips the sign
        } else {
            residue *= gamma_real(g.p);
        }
    }
    for (const auto& g : spec.upper_right) {
        if (at_zero(g)) {
            --order;
            residue *= -g.scale;  // 1/Gamma(-A* s) ~ -A* s
        } else {
            residue *= rgamma(g.p);
        }
    }
    if (order > 1) throw DivergenceError("eval_h_at_zero: multiple pole at s = 0");
    if (order < 1) return 0.0;
    for (const auto& g : spec.upper_left) residue *= gamma_real(1.0 - g.p);
    for (const auto& g : spec.lower_right) residue *= rgamma(1.0 - g.p);
    return residue;
}

double eval_g_at_zero(const GFunctionSpec& spec, const QuadratureConfig& cfg) {
    return eval_h_at_zero(lift(spec), cfg);
}

GFunctionSpec simplify_g(GFunctionSpec g) {
    auto cancel = [](std::vector<double>& x, std::vector<double>& y) {
        for (std::size_t i = 0; i < x.size();) {
            auto it = std::find_if(y.begin(), y.end(), [&](double v) { return equal_params(v, x[i]); });
            if (it != y.end()) {
                y.erase(it);
                x.erase(x.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
    };
    cancel(g.a, g.b_star);
    cancel(g.a_star, g.b);
    for (auto* v : {&g.a, &g.a_star, &g.b, &g.b_star}) std::sort(v->begin(), v->end());
    return g;
}

std::string to_string(const GFunctionSpec& g) {
    std::ostringstream os;
    os << "G(" << join(g.a);
    if (!g.a_star.empty()) os << " | " << join(g.a_star);
    os << "; " << join(g.b) << "; " << join(g.b_star) << ")";
    return os.str();
}

std::string to_string(const HFunctionSpec& h) {
    std::ostringstream os;
    os << "H(" << join(h.upper_left) << " | " << join(h.upper_right) << "; " << join(h.lower_left)
       << " | " << join(h.lower_right) << ")";
    return os.str();
}

} // namespace gns
