#pragma once

// Scaling limits of GUE linear statistics and their finite-N counterparts.
//
// Global scaling: k = tau / sqrt(2N). Bulk scaling: k = 2 sqrt(2N) tau.
// Soft edge: k = -i gamma sqrt(2) N^{1/6}.

#include "rmtsf/gue/quadrature.hpp"

#include <complex>
#include <vector>

namespace rmtsf::gue {

// Global limits.

/// lim N^{-1} <sum exp(i tau lambda / sqrt(2N))> = 2 J_1(tau)/tau.
double global_mean_limit(double tau);
/// lim Sbar_N(tau / sqrt(2N)).
double global_sbar_limit(double tau);
/// lim Cov(sum exp(i tau1 lambda/sqrt(2N)), sum exp(i tau2 lambda/sqrt(2N))).
/// Continuous through tau1 + tau2 = 0, where it reduces to global_sbar_limit.
double global_cov_limit(double tau1, double tau2);

double global_mean_finite(int n, double tau);
double global_sbar_finite(int n, double tau, const AccuracyPolicy& policy = {});
double global_cov_finite(int n, double tau1, double tau2, const AccuracyPolicy& policy = {});

// Bulk limits.

/// Marchenko-Pastur profile: (2/pi)(tau sqrt(1 - tau^2) + arcsin tau) on (0, 1), 1 beyond.
double bulk_ramp_limit(double tau);
/// N^{-1} Sbar_N(2 sqrt(2N) tau).
double bulk_ramp_finite(int n, double tau, const AccuracyPolicy& policy = {});
/// max over tau in (0, 1) of |bulk_ramp_finite - bulk_ramp_limit|, sampled on a
/// grid of spacing 0.02/N below tau = 0.8/N (where the maximum sits) and 0.05 above.
double bulk_ramp_uniform_error(int n, const AccuracyPolicy& policy = {});

/// (4/(gamma pi)) int_0^tau sinh(gamma sqrt(1 - s^2)) ds, frozen at its tau = 1 value beyond.
double bulk_complex_limit(double gamma, double tau, const AccuracyPolicy& policy = {});
/// N^{-1} Cov at k1 = i gamma/(2 sqrt(2N)) + 2 sqrt(2N) tau, k2 = conj(k1).
std::complex<double> bulk_complex_finite(int n, double gamma, double tau, const AccuracyPolicy& policy = {});

/// Plancherel-Rotach phase sin(2N(sqrt(X(1-X)) + arcsin sqrt X) - pi/4).
double plancherel_rotach_phase(int n, double x);
/// Leading asymptotic form of <sum exp(2 i sqrt(2N) tau lambda)> for 0 < tau < 1.
double bulk_mean_asymptotic(int n, double tau);
/// Small-tau form cos(4 N tau - 3 pi/4) / (2 sqrt(2 pi N) tau^{3/2}).
double dip_asymptotic(int n, double tau);

// Soft edge.

/// <sum exp(gamma x)> for the Airy process, e^{gamma^3/12} / (2 sqrt(pi) gamma^{3/2}).
double soft_mean_limit(double gamma);
/// Covariance of sum exp(gamma1 x) and sum exp(gamma2 x) for the Airy process.
double soft_cov_limit(double gamma1, double gamma2);
/// int exp(gamma x) rho_soft(x) dx by quadrature.
Estimate soft_mean_quadrature(double gamma, const AccuracyPolicy& policy = {});
/// Covariance from the Airy kernel by direct double quadrature:
/// int e^{(g1+g2)x} rho(x) dx - int int e^{g1 x + g2 y} K(x, y)^2 dx dy.
Estimate soft_cov_quadrature(double gamma1, double gamma2, int panels = 0);
/// Finite-N soft-edge mean e^{-2 gamma N^{2/3}} e^{gamma^2 N^{1/3}/2} L_{N-1}^{(1)}(-gamma^2 N^{1/3}).
double soft_mean_finite(int n, double gamma);

// Convergence rates.

/// Least-squares slope of log|err| against log N.
double log_log_slope(const std::vector<double>& ns, const std::vector<double>& errors);

}  // namespace rmtsf::gue
