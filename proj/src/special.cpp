#include "gns/special.hpp"

#include "gns/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gns {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr double kStirling[] = {
    1.0 / 12.0,          -1.0 / 360.0,       1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,  1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0,
};

// log w with the branch chosen so that it stays continuous as Im w crosses 0.
std::complex<double> log_continuous(std::complex<double> w) {
    if (w.real() >= 0.0) return std::log(w);
    return std::log(-w) + std::complex<double>(0.0, kPi);
}

std::complex<double> stirling(std::complex<double> z) {
    const std::complex<double> half_log_2pi(0.5 * std::log(2.0 * kPi), 0.0);
    std::complex<double> r = (z - 0.5) * std::log(z) - z + half_log_2pi;
    const std::complex<double> z2 = z * z;
    std::complex<double> zp = z;
    for (double c : kStirling) {
        const std::complex<double> t = c / zp;
        r += t;
        if (std::abs(t) < 1e-17 * std::abs(r)) break;
        zp *= z2;
    }
    return r;
}

double spherical_j_half(double nu, double x) {
    // nu = l + 1/2 with l >= -1, closed forms plus upward recurrence
    const double pre = std::sqrt(2.0 / (kPi * x));
    double jm = pre * std::cos(x);  // J_{-1/2}
    if (nu == -0.5) return jm;
    double j = pre * std::sin(x);   // J_{1/2}
    for (double v = 0.5; v < nu - 0.25; v += 1.0) {
        const double jn = (2.0 * v / x) * j - jm;
        jm = j;
        j = jn;
    }
    return j;
}

double kernel_series(double nu, double s) {
    const double q = -0.25 * s * s;
    double term = rgamma(nu + 1.0);
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum / std::pow(2.0, nu);
}

double hyp_series(double a, double b, double c, double w) {
    double term = 1.0, sum = 1.0;
    const long max_terms = 20000000;
    int small = 0;
    for (long k = 0; k < max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const double num = (a + kd) * (b + kd);
        if (num == 0.0) return sum;
        term *= num / ((c + kd) * (kd + 1.0)) * w;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++small >= 2) return sum;
        } else {
            small = 0;
        }
    }
    throw DivergenceError("hyp2f1: series did not converge (argument too close to 1)");
}

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

} // namespace

bool is_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

bool is_half_integer(double x) { return is_integer(x - 0.5); }

double sin_pi(double x) {
    if (is_integer(x)) return 0.0;
    // reduce to [-1, 1] first so that sin(pi x) keeps full relative accuracy
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

double gamma_real(double x) {
    if (std::isnan(x)) throw ParameterError("gamma: NaN argument");
    if (nonpositive_integer(x)) throw PoleError("gamma: pole at " + std::to_string(x));
    if (x > 171.6) throw NumericalError("gamma: overflow at " + std::to_string(x));
    const double g = std::tgamma(x);
    if (!std::isfinite(g)) throw NumericalError("gamma: overflow at " + std::to_string(x));
    return g;
}

double rgamma(double x) {
    if (nonpositive_integer(x)) return 0.0;
    if (x > 171.6) return 0.0;
    return 1.0 / std::tgamma(x);
}

std::complex<double> log_gamma_vertical(std::complex<double> z) {
    if (z.imag() == 0.0 && nonpositive_integer(z.real()))
        throw PoleError("log_gamma: pole at " + std::to_string(z.real()));
    std::complex<double> shift(0.0, 0.0);
    while (z.real() < 10.0) {
        shift += log_continuous(z);
        z += 1.0;
    }
    return stirling(z) - shift;
}

double pochhammer(double z, unsigned ell) {
    double p = 1.0;
    for (unsigned i = 0; i < ell; ++i) p *= z + i;
    return p;
}

double bessel_j(double nu, double x) {
    if (nu < -0.5) throw ParameterError("bessel_j: order below -1/2 unsupported");
    if (x < 0.0) throw ParameterError("bessel_j: negative argument");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw ParameterError("bessel_j: J_{-1/2} is singular at 0");
    }
    if (is_half_integer(nu) && x > nu) return spherical_j_half(nu, x);
    if (nu == -0.5) return spherical_j_half(nu, x);
    return std::cyl_bessel_j(nu, x);
}

double bessel_j_kernel(double nu, double s) {
    if (nu < -0.5) throw ParameterError("bessel_j_kernel: order below -1/2 unsupported");
    s = std::abs(s);
    if (s < 0.5) return kernel_series(nu, s);
    if (nu == -0.5) return std::sqrt(2.0 / kPi) * std::cos(s);
    if (nu == 0.5) return std::sqrt(2.0 / kPi) * std::sin(s) / s;
    return bessel_j(nu, s) / std::pow(s, nu);
}

double bessel_k(double mu, double x) {
    if (!(x > 0.0)) throw ParameterError("bessel_k: argument must be positive");
    mu = std::abs(mu);
    if (x > 705.0) return 0.0;
    if (mu == 0.5) return std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
    // leading small-x term; the library routine fails on subnormal input
    if (x < 1e-280) {
        if (mu == 0.0) return -std::log(0.5 * x) - std::numbers::egamma;
        return std::exp(std::lgamma(mu) + (mu - 1.0) * std::log(2.0) - mu * std::log(x));
    }
    return std::cyl_bessel_k(mu, x);
}

double hyp2f1_neg(double a, double b, double c, double rho2) {
    if (nonpositive_integer(c)) throw PoleError("hyp2f1: c is a nonpositive integer");
    if (rho2 < 0.0) throw ParameterError("hyp2f1_neg: rho2 must be nonnegative");
    if (rho2 == 0.0) return 1.0;
    // Pfaff: 2F1(a,b;c;-x) = (1+x)^{-a} 2F1(a, c-b; c; x/(1+x))
    if (nonpositive_integer(c - a) && !nonpositive_integer(c - b)) std::swap(a, b);
    if (!nonpositive_integer(c - b) && !nonpositive_integer(a) && b < a) std::swap(a, b);
    const double w = rho2 / (1.0 + rho2);
    const double A = a, B = c - b, C = c;
    const double pre = std::pow(1.0 + rho2, -a);
    const bool terminating = nonpositive_integer(A) || nonpositive_integer(B);
    const double gap = C - A - B;
    if (terminating || w <= 0.9 || is_integer(gap, 1e-9)) return pre * hyp_series(A, B, C, w);
    // connection formula around w = 1
    const double v = 1.0 - w;
    const double t1 = gamma_real(C) * gamma_real(gap) * rgamma(C - A) * rgamma(C - B);
    const double t2 = gamma_real(C) * gamma_real(-gap) * rgamma(A) * rgamma(B);
    double s = 0.0;
    if (t1 != 0.0) s += t1 * hyp_series(A, B, 1.0 - gap, v);
    if (t2 != 0.0) s += t2 * std::pow(v, gap) * hyp_series(C - A, C - B, 1.0 + gap, v);
    return pre * s;
}

} // namespace gns
