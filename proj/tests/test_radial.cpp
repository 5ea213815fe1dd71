#include "gns/errors.hpp"
#include "gns/quadrature.hpp"
#include "gns/radial.hpp"
#include "gns/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace gns;

namespace {
constexpr double pi = std::numbers::pi;
double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

RadialProfile lorentz() {
    RadialProfile g;
    g.eval = [](double x) { return 1.0 / (1.0 + x * x); };
    g.decay = DecayClass::algebraic(2.0);
    g.nonneg_fourier = true;
    return g;
}

RadialProfile kmu(double mu, double sigma) {
    RadialProfile g;
    g.eval = [mu, sigma](double x) { return bessel_k(mu, x) / std::pow(x, sigma); };
    g.decay = DecayClass::exponential(1.0);
    return g;
}
} // namespace

TEST_SUITE("radial") {

TEST_CASE("radial_integral examples") {
    RadialProfile gauss;
    gauss.eval = [](double x) { return std::exp(-x * x); };
    CHECK(rel(radial_integral(gauss, 2, {}), pi) < 1e-10);
    CHECK(rel(radial_integral(lorentz(), 1, {}), pi) < 1e-10);
    RadialProfile e;
    e.eval = [](double x) { return std::exp(-x) / x; };
    CHECK(rel(radial_integral(e, 3, {}), 4 * pi) < 1e-10);
    CHECK(rel(sphere_area(3), 4 * pi) < 1e-15);
    CHECK(rel(sphere_area(1), 2.0) < 1e-15);
}

TEST_CASE("scaling covariance") {
    for (int d : {1, 2, 3})
        for (double lam : {0.5, 3.0}) {
            RadialProfile g;
            g.eval = [](double x) { return std::exp(-x) / (1.0 + x * x); };
            RadialProfile gl = g;
            gl.eval = [lam](double x) { return std::exp(-lam * x) / (1.0 + lam * lam * x * x); };
            gl.scale = 1.0 / lam;
            CHECK(rel(radial_integral(gl, d, {}), std::pow(lam, -d) * radial_integral(g, d, {})) < 1e-10);
        }
}

TEST_CASE("beta integral") {
    CHECK(rel(beta_integral(0.5, 1, 1), pi / 2) < 1e-13);
    CHECK(rel(beta_integral(1.0 / 3, 1, 3), 0.25) < 1e-13);
    CHECK(rel(beta_integral_integer(1.0 / 3, 1, 3), 0.25) < 1e-12);
    CHECK(rel(beta_integral_integer(0.5, 1, 1), pi / 2) < 1e-13);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int k = 0; k < 30; ++k) {
        const double b = 0.5 + 2.5 * U(rng);
        const double a = b * (0.05 + 0.9 * U(rng));
        const int ui = 1 + int(5 * U(rng)) % 5;
        const double u = k % 2 ? double(ui) : 0.3 + 3.0 * U(rng);
        auto f = [=](double x) { return std::pow(x, 2 * a * u - 1) / std::pow(1 + std::pow(x, 2 * b), u); };
        const auto q = quad::positive_axis(f, 1.0, 0.0, 1e-12);
        CHECK(rel(beta_integral(a, b, u), q.value) <= 1e-8);
        if (k % 2) CHECK(rel(beta_integral_integer(a, b, ui), beta_integral(a, b, u)) <= 1e-12);
    }
}

TEST_CASE("i_jn") {
    CHECK(rel(i_jn(0, 1, 1), pi) < 1e-13);
    CHECK_THROWS(i_jn(0, 0.5, 1));
    struct P {
        double j, n;
        int d;
    };
    for (auto p : {P{0, 2, 3}, P{0, 1, 1}, P{1, 3, 2}, P{0.5, 2.5, 2}, P{1, 3, 3}}) {
        RadialProfile g;
        g.eval = [p](double x) { return std::pow(x, 2 * p.j) / (1 + std::pow(x, 2 * p.n)); };
        g.decay = DecayClass::algebraic(2 * p.n - 2 * p.j);
        CHECK(rel(i_jn(p.j, p.n, p.d), radial_integral(g, p.d, {})) <= 1e-8);
    }
}

TEST_CASE("hankel transform") {
    const QuadratureConfig cfg;
    CHECK(rel(hankel_inverse_ft(lorentz(), 1, 0.0, cfg), std::sqrt(pi / 2)) < 1e-9);
    for (double rho : {0.5, 1.0, 3.0})
        CHECK(rel(hankel_inverse_ft(lorentz(), 1, rho, cfg), std::sqrt(pi / 2) * std::exp(-rho)) < 1e-8);
}

TEST_CASE("macdonald transform matches quadrature") {
    struct P {
        double mu, sigma;
        int d;
    };
    CHECK(rel(macdonald_transform(0, 0, 3, 1.0), 0.4431134627263791) < 1e-12);
    for (auto p : {P{0, 0, 3}, P{0.5, 0.5, 2}, P{1, 1, 3}}) {
        for (double rho : {0.0, 0.3, 1.0, 2.0, 5.0}) {
            const double want = macdonald_transform(p.mu, p.sigma, p.d, rho);
            const double got = hankel_inverse_ft(kmu(p.mu, p.sigma), p.d, rho, {});
            CHECK(rel(got, want) <= 1e-7);
            const double de = hankel_inverse_ft_de(kmu(p.mu, p.sigma), p.d, rho, 1e-12, 1e-10);
            CHECK(rel(de, want) <= 1e-7);
        }
    }
    const auto adm = macdonald_admissibility(0.75, 0.0, 3);
    CHECK(adm.l1);
    CHECK_FALSE(macdonald_admissibility(1.5, 0.0, 3).l2);
}

TEST_CASE("Lr norms") {
    const QuadratureConfig cfg;
    RadialProfile e;
    e.eval = [](double x) { return std::exp(-x); };
    CHECK(rel(lr_norm_radial(e, 2.0, 1, cfg), 1.0) < 1e-10);
    RadialProfile e2 = e;
    e2.eval = [](double x) { return std::sqrt(pi / 2) * std::exp(-x); };
    CHECK(rel(lr_norm_radial(e2, kInfinity, 1, cfg), std::sqrt(pi / 2)) < 1e-9);
    RadialProfile c;
    c.eval = [](double x) { return 1.0 / (1 + x * x); };
    c.decay = DecayClass::algebraic(2.0);
    CHECK(rel(lr_norm_radial(c, 4.0, 2, cfg), std::pow(pi / 3, 0.25)) < 1e-9);
}

TEST_CASE("nonnegative data: sup at the origin") {
    const QuadratureConfig cfg;
    RadialProfile f;
    f.eval = [cfg](double rho) { return hankel_inverse_ft(lorentz(), 1, rho, cfg); };
    f.decay = DecayClass::exponential(1.0);
    const double f0 = hankel_inverse_ft(lorentz(), 1, 0.0, cfg);
    CHECK(std::abs(sup_abs(f, 20.0) - f0) <= 1e-9);
}

}
