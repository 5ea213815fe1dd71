#pragma once

#include "gns/config.hpp"

#include <memory>

namespace gns {

// Pieces of the regularized Bessel-potential trial quotient at one eps.
struct MinusTerms {
    double eps = 0.0;
    double U = 0.0;  // ||h||_2
    double V = 0.0;  // ||D^n h||_2
    double Y = 0.0;  // ||D^j h||_r
    double G = 0.0;  // Y / (U^{1-theta} V^theta)
};

// Fast evaluator for one (j, n, theta, d). Builds a table of x^mu K_mu(x),
// mu = n - j, and evaluates D^j h through double-exponential Fourier rules.
// Not safe to share between threads; make one per worker.
class MinusTrial {
public:
    MinusTrial(double j, double n, double theta, int d, const QuadratureConfig& cfg = {});
    ~MinusTrial();
    MinusTrial(MinusTrial&&) noexcept;
    MinusTrial& operator=(MinusTrial&&) noexcept;

    // xi^n K_{n-j}(xi) / (xi^2 + eps^2)^{n - j/2}
    double dj_fourier(double xi, double eps) const;
    // D^j h at radius rho
    double m(double eps, double rho) const;
    MinusTerms evaluate(double eps) const;

    double r() const { return r_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    double r_ = 2.0;
};

} // namespace gns
