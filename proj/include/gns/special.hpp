#pragma once

#include <complex>

namespace gns {

// Gamma on the real line. Throws PoleError at 0, -1, -2, ... and
// NumericalError on overflow.
double gamma_real(double x);

// 1/Gamma(x); zero at the poles of Gamma.
double rgamma(double x);

// log Gamma(z), continuous along vertical lines Re z = const.
// exp() of the result is Gamma(z); the imaginary part is not reduced mod 2*pi.
std::complex<double> log_gamma_vertical(std::complex<double> z);

// (z)_ell = z (z+1) ... (z+ell-1)
double pochhammer(double z, unsigned ell);

// J_nu(x) for nu >= -1/2, x >= 0.
double bessel_j(double nu, double x);

// J_nu(s) / s^nu, finite at s = 0 with value 1/(2^nu Gamma(nu+1)).
double bessel_j_kernel(double nu, double s);

// K_mu(x) for x > 0; symmetric in mu.
double bessel_k(double mu, double x);

// 2F1(a, b; c; -rho2) for rho2 >= 0.
double hyp2f1_neg(double a, double b, double c, double rho2);

// Sin(pi x) with exact zeros at integers.
double sin_pi(double x);

bool is_integer(double x, double tol = 0.0);
bool is_half_integer(double x);

} // namespace gns
