#include "gns/lower_minus.hpp"

#include "gns/errors.hpp"
#include "gns/quadrature.hpp"
#include "gns/radial.hpp"
#include "gns/special.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include <cmath>
#include <limits>
#include <utility>
#include <numbers>
#include <vector>

namespace gns {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTableLo = 1e-9;
constexpr double kTableHi = 100.0;  // x^mu K_mu(x) < e^{-95} beyond this
constexpr int kTablePoints = 4000;

// log(x^mu K_mu(x)) on a log grid
class LogKTable {
public:
    explicit LogKTable(double mu) : mu_(mu) {
        u0_ = std::log(kTableLo);
        u1_ = std::log(kTableHi);
        const double du = (u1_ - u0_) / (kTablePoints - 1);
        std::vector<double> v(kTablePoints);
        for (int i = 0; i < kTablePoints; ++i) v[i] = exact(u0_ + i * du);
        auto slope = [&](double x) { return -x * bessel_k(mu_ - 1.0, x) / bessel_k(mu_, x); };
        spline_ = std::make_unique<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
            v.begin(), v.end(), u0_, du, slope(kTableLo), slope(kTableHi));
    }

    double operator()(double lx) const {
        if (lx > u1_) return -kInfinity;
        if (lx < u0_) return exact(lx);
        return (*spline_)(lx);
    }

private:
    double exact(double lx) const { return mu_ * lx + std::log(bessel_k(mu_, std::exp(lx))); }

    double mu_, u0_ = 0.0, u1_ = 0.0;
    std::unique_ptr<boost::math::interpolators::cardinal_cubic_b_spline<double>> spline_;
};

} // namespace

struct MinusTrial::Impl {
    double j, n, theta, mu;
    int d;
    double nu;
    QuadratureConfig cfg;
    LogKTable table;
    mutable double ref_eps = -1.0, ref_m0 = 0.0;

    Impl(double j_, double n_, double th, int d_, const QuadratureConfig& c)
        : j(j_), n(n_), theta(th), mu(n_ - j_), d(d_), nu(0.5 * d_ - 1.0), cfg(c), table(n_ - j_) {}

    // x^p K_mu(x) / (x^2 + eps^2)^q
    double g(double x, double eps, double p, double q) const {
        if (!(x > 0.0)) return 0.0;
        const double lx = std::log(x);
        const double l = table(lx);
        if (!std::isfinite(l)) return 0.0;
        return std::exp(l + (p - mu) * lx - q * std::log(x * x + eps * eps));
    }
    double dj(double x, double eps) const { return g(x, eps, n, n - 0.5 * j); }

    double check(const quad::Result& r, const char* what) const {
        if (!r.converged) throw ToleranceError(std::string(what) + ": tolerance not reached");
        return r.value;
    }

    double m_direct(double eps, double rho, double upper, double abs_tol) const {
        auto f = [&](double x) {
            const double v = dj(x, eps);
            return v == 0.0 ? 0.0 : std::pow(x, d - 1) * v * bessel_j_kernel(nu, rho * x);
        };
        const double scale = std::min(1.0, upper);
        return check(quad::positive_axis(f, scale, abs_tol, std::max(0.1 * cfg.rel_tol, 1e-10), cfg.max_panels, 1.0, upper),
                     "trial transform");
    }

    double reference(double eps) const {
        if (eps != ref_eps) {
            ref_m0 = std::abs(m0(eps));
            ref_eps = eps;
        }
        return ref_m0;
    }

    double m(double eps, double rho) const {
        const double ref = reference(eps);
        if (rho < 1e-3) return m_direct(eps, rho, kTableHi, 1e-12 * ref);
        RadialProfile p;
        p.eval = [&](double x) { return dj(x, eps); };
        p.decay = DecayClass::exponential(1.0);
        return hankel_inverse_ft_de(p, d, rho, 1e-12 * ref, cfg.rel_tol);
    }

    double m0(double eps) const {
        auto f = [&](double x) { return std::pow(x, d - 1) * dj(x, eps); };
        return bessel_j_kernel(nu, 0.0) * check(quad::positive_axis(f, 1.0, 0.0, 0.1 * cfg.rel_tol), "trial transform");
    }
};

MinusTrial::MinusTrial(double j, double n, double theta, int d, const QuadratureConfig& cfg) {
    cfg.validate();
    if (d < 1) throw ParameterError("dimension must be a positive integer");
    if (!(j >= 0.0 && n > j)) throw ParameterError("trial quotient requires n > j >= 0");
    if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("trial quotient requires 0 < theta < 1");
    const double inv_r = 0.5 - (theta * n - j) / d;
    if (!(inv_r >= 0.0 && inv_r <= 0.5)) throw ParameterError("trial quotient requires 0 <= theta n - j <= d/2");
    r_ = inv_r == 0.0 ? kInfinity : 1.0 / inv_r;
    impl_ = std::make_unique<Impl>(j, n, theta, d, cfg);
}

MinusTrial::~MinusTrial() = default;
MinusTrial::MinusTrial(MinusTrial&&) noexcept = default;
MinusTrial& MinusTrial::operator=(MinusTrial&&) noexcept = default;

double MinusTrial::dj_fourier(double xi, double eps) const { return impl_->dj(xi, eps); }

double MinusTrial::m(double eps, double rho) const {
    if (rho < 0.0) throw ParameterError("rho must be nonnegative");
    if (rho == 0.0) return impl_->m0(eps);
    return impl_->m(eps, rho);
}

MinusTerms MinusTrial::evaluate(double eps) const {
    const Impl& I = *impl_;
    if (!(eps >= 1e-3)) throw ParameterError("trial quotient requires eps >= 1e-3");
    const double c = sphere_area(I.d);
    const double p0 = I.n - I.j, q = I.n - 0.5 * I.j;
    auto sq = [&](double extra) {
        auto f = [&](double x) {
            const double v = I.g(x, eps, p0, q);
            return v == 0.0 ? 0.0 : std::pow(x, I.d - 1 + extra) * v * v;
        };
        return std::sqrt(c * I.check(quad::positive_axis(f, 1.0, 0.0, 1e-11), "trial norm"));
    };
    MinusTerms t;
    t.eps = eps;
    t.U = sq(0.0);
    t.V = sq(2.0 * I.n);
    if (std::isinf(r_)) {
        // nonnegative Fourier data: the sup sits at the origin
        t.Y = std::abs(I.m0(eps));
    } else {
        const double r = r_;
        auto f = [&](double rho) {
            const double v = std::abs(I.m(eps, rho));
            return v == 0.0 ? 0.0 : std::exp((I.d - 1) * std::log(rho) + r * std::log(v));
        };
        const double rt = std::max(1e-9, I.cfg.rel_tol * 100.0);
        t.Y = std::pow(c * I.check(quad::positive_axis(f, 1.0, 0.0, rt, I.cfg.max_panels), "trial norm"), 1.0 / r);
    }
    t.G = t.Y / (std::pow(t.U, 1.0 - I.theta) * std::pow(t.V, I.theta));
    return t;
}

} // namespace gns
