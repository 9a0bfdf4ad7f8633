#pragma once

// Finite-N GUE spectral form factor quantities. The eigenvalue density uses
// the weight exp(-x^2). Covariances of linear statistics are computed through
// the LUE kernel at a = 0 and verified against direct GUE double integrals in
// the tests.

#include "rmtsf/algebra/rational.hpp"
#include "rmtsf/gue/quadrature.hpp"

#include <complex>

namespace rmtsf::gue {

/// <sum_j exp(i k lambda_j)> = exp(-k^2/4) L_{N-1}^{(1)}(k^2/2).
double mean_form_factor(int n, double k);
std::complex<double> mean_form_factor(int n, std::complex<double> k);

/// <sum_j lambda_j^{2p}> as a finite binomial sum.
Rational moments_2p(int n, int p);
/// The same moment from the terminating 2F1(-p, 1-N; 2; 2) form.
Rational moments_2p_hypergeometric(int n, int p);

/// Connected form factor Sbar_N(k) = Var(sum_j exp(i k lambda_j)), from
/// int_0^k t K_N^L(t^2/2, t^2/2) dt. Throws QuadratureError if the two
/// quadrature schemes disagree beyond tolerance.
Estimate sbar(int n, double k, const AccuracyPolicy& policy = {});

/// H(t1, t2) = (t1 + t2)/2 * K_N^L(t1^2/2, t2^2/2) at a = 0.
std::complex<double> h_kernel(int n, std::complex<double> t1, std::complex<double> t2);
double h_kernel(int n, double t1, double t2);

/// Cov(sum exp(i k1 lambda), sum exp(-i k2 lambda)) = int_0^{k2} H(k1 - k2 + s, s) ds,
/// along the straight segment when k2 is complex.
ComplexEstimate cov_phase(int n, std::complex<double> k1, std::complex<double> k2, const AccuracyPolicy& policy = {});

/// int_0^inf H(k1 + s, s) ds; equals the mean form factor at k1.
Estimate half_line_transform(int n, double k1, const AccuracyPolicy& policy = {});

/// |(d/dx + d/dy) K_N(x, y) + (psi_N(x) psi_{N-1}(y) + psi_{N-1}(x) psi_N(y)) / (p_{N-1}, p_{N-1})|
/// for the GUE kernel, with derivatives by high-order finite differences.
double diff_identity_residual(int n, double x, double y);
/// |d/dt K_N(t, t) + 2 psi_N(t) psi_{N-1}(t) / (p_{N-1}, p_{N-1})|.
double diagonal_identity_residual(int n, double t);

}  // namespace rmtsf::gue
