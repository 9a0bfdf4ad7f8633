#include "rmtsf/gue/limits.hpp"

#include "rmtsf/gue/form_factor.hpp"
#include "rmtsf/gue/kernels.hpp"
#include "rmtsf/gue/orthopoly.hpp"
#include "rmtsf/gue/special_functions.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rmtsf::gue {

namespace {

constexpr double kPi = std::numbers::pi;

double j0(double x) { return sf::bessel_j0(x); }
double j1(double x) { return sf::bessel_j1(x); }

}  // namespace

double global_mean_limit(double tau) {
    if (tau == 0.0) return 1.0;
    return 2.0 * j1(tau) / tau;
}

double global_sbar_limit(double tau) {
    if (tau == 0.0) return 0.0;
    const double a = j0(tau);
    const double b = j1(tau);
    return tau * tau / 2.0 * (a * a + b * b - a * b / tau);
}

double global_cov_limit(double tau1, double tau2) {
    const double s = tau1 + tau2;
    if (std::abs(s) > 1e-6 * (1.0 + std::abs(tau1))) {
        return -tau1 * tau2 / (2.0 * s) * (j0(tau1) * j1(tau2) + j1(tau1) * j0(tau2));
    }
    // Expand the numerator about tau2 = -tau1: its derivative there is
    // J0^2 + J1^2 - J0 J1/tau1, evaluated at tau1.
    if (tau1 == 0.0) return 0.0;
    const double a = j0(tau1);
    const double b = j1(tau1);
    const double g1 = a * a + b * b - a * b / tau1;
    return -tau1 * tau2 / 2.0 * g1;
}

double global_mean_finite(int n, double tau) { return mean_form_factor(n, tau / std::sqrt(2.0 * n)) / n; }

double global_sbar_finite(int n, double tau, const AccuracyPolicy& policy) {
    return sbar(n, tau / std::sqrt(2.0 * n), policy).value;
}

double global_cov_finite(int n, double tau1, double tau2, const AccuracyPolicy& policy) {
    const double s = std::sqrt(2.0 * n);
    return cov_phase(n, tau1 / s, -tau2 / s, policy).value.real();
}

double bulk_ramp_limit(double tau) {
    tau = std::abs(tau);
    if (tau >= 1.0) return 1.0;
    return 2.0 / kPi * (tau * std::sqrt(1.0 - tau * tau) + std::asin(tau));
}

double bulk_ramp_finite(int n, double tau, const AccuracyPolicy& policy) {
    return sbar(n, 2.0 * std::sqrt(2.0 * n) * tau, policy).value / n;
}

double bulk_ramp_uniform_error(int n, const AccuracyPolicy& policy) {
    if (n < 1) throw std::invalid_argument("bulk_ramp_uniform_error: n must be positive");
    std::vector<double> taus;
    for (int j = 1; j <= 40; ++j) taus.push_back(0.02 * j / n);
    for (int j = 1; j < 20; ++j) taus.push_back(0.05 * j);
    double sup = 0.0;
    for (double t : taus) sup = std::max(sup, std::abs(bulk_ramp_finite(n, t, policy) - bulk_ramp_limit(t)));
    return sup;
}

double bulk_complex_limit(double gamma, double tau, const AccuracyPolicy& policy) {
    if (gamma == 0.0) return bulk_ramp_limit(tau);
    tau = std::min(std::abs(tau), 1.0);
    const Estimate e = require(integrate([&](double s) { return std::sinh(gamma * std::sqrt(1.0 - s * s)); }, 0.0, tau, policy),
                               "bulk_complex_limit");
    return 4.0 / (gamma * kPi) * e.value;
}

std::complex<double> bulk_complex_finite(int n, double gamma, double tau, const AccuracyPolicy& policy) {
    const double r = std::sqrt(2.0 * n);
    const std::complex<double> k1(2.0 * r * tau, gamma / (2.0 * r));
    return cov_phase(n, k1, std::conj(k1), policy).value / static_cast<double>(n);
}

double plancherel_rotach_phase(int n, double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("plancherel_rotach_phase: X must lie in [0, 1]");
    return std::sin(2.0 * n * (std::sqrt(x * (1.0 - x)) + std::asin(std::sqrt(x))) - kPi / 4.0);
}

double bulk_mean_asymptotic(int n, double tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::domain_error("bulk_mean_asymptotic: tau must lie in (0, 1)");
    const double pre = 1.0 / std::sqrt(4.0 * n * tau * tau) / std::sqrt(2.0 * kPi * tau * std::sqrt(1.0 - tau * tau));
    return pre * plancherel_rotach_phase(n, tau * tau);
}

double dip_asymptotic(int n, double tau) {
    if (!(tau > 0.0)) throw std::domain_error("dip_asymptotic: tau must be positive");
    return std::cos(4.0 * n * tau - 3.0 * kPi / 4.0) / (2.0 * std::sqrt(2.0 * kPi * n) * std::pow(tau, 1.5));
}

double soft_mean_limit(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("soft_mean_limit: gamma must be positive");
    return std::exp(gamma * gamma * gamma / 12.0) / (2.0 * std::sqrt(kPi) * std::pow(gamma, 1.5));
}

double soft_cov_limit(double gamma1, double gamma2) {
    if (!(gamma1 > 0.0 && gamma2 > 0.0)) throw std::domain_error("soft_cov_limit: gammas must be positive");
    const double g = gamma1 + gamma2;
    return soft_mean_limit(g) * sf::erf(0.5 * std::sqrt(gamma1 * gamma2 * g));
}

namespace {

// Lower cutoff where exp(gamma x) sqrt|x| falls below ~1e-17 relative to the bulk.
double soft_lower_cutoff(double gamma) { return -(45.0 / gamma + 5.0); }
constexpr double kSoftUpper = 12.0;

}  // namespace

Estimate soft_mean_quadrature(double gamma, const AccuracyPolicy& policy) {
    if (!(gamma > 0.0)) throw std::domain_error("soft_mean_quadrature: gamma must be positive");
    const SoftEdgeKernel K;
    AccuracyPolicy p = policy;
    if (p.panel_width <= 0.0) p.panel_width = 2.0;
    return require(integrate([&](double x) { return std::exp(gamma * x) * K.diagonal(x); }, soft_lower_cutoff(gamma),
                             kSoftUpper, p),
                   "soft_mean_quadrature");
}

Estimate soft_cov_quadrature(double gamma1, double gamma2, int panels) {
    if (!(gamma1 > 0.0 && gamma2 > 0.0)) throw std::domain_error("soft_cov_quadrature: gammas must be positive");
    const double lo1 = soft_lower_cutoff(gamma1);
    const double lo2 = soft_lower_cutoff(gamma2);
    const double lo = std::min(lo1, lo2);
    const double hi = kSoftUpper;
    if (panels <= 0) panels = static_cast<int>(std::ceil((hi - lo) / 0.5));

    // Composite Gauss-Legendre grid shared by both variables.
    using GL = boost::math::quadrature::gauss<double, 30>;
    std::vector<double> x;
    std::vector<double> w;
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = lo + (p + 0.5) * h;
        const auto& ab = GL::abscissa();
        const auto& wt = GL::weights();
        for (std::size_t i = 0; i < ab.size(); ++i) {
            for (int sgn : {-1, 1}) {
                if (ab[i] == 0.0 && sgn < 0) continue;
                x.push_back(c + sgn * ab[i] * h / 2.0);
                w.push_back(wt[i] * h / 2.0);
            }
        }
    }
    const std::size_t m = x.size();
    std::vector<double> ai(m), aip(m), rho(m);
    for (std::size_t i = 0; i < m; ++i) {
        ai[i] = sf::airy_ai(x[i]);
        aip[i] = sf::airy_ai_prime(x[i]);
        rho[i] = aip[i] * aip[i] - x[i] * ai[i] * ai[i];
    }
    auto kernel = [&](std::size_t i, std::size_t j) {
        if (i == j) return rho[i];
        return (ai[i] * aip[j] - ai[j] * aip[i]) / (x[i] - x[j]);
    };
    long double single = 0.0L;
    long double dbl = 0.0L;
    for (std::size_t i = 0; i < m; ++i) {
        single += w[i] * std::exp((gamma1 + gamma2) * x[i]) * rho[i];
        const double ei = w[i] * std::exp(gamma1 * x[i]);
        long double row = 0.0L;
        for (std::size_t j = 0; j < m; ++j) {
            const double k = kernel(i, j);
            row += w[j] * std::exp(gamma2 * x[j]) * k * k;
        }
        dbl += ei * row;
    }
    Estimate e;
    e.value = static_cast<double>(single - dbl);
    // No internal error estimate: callers compare panel refinements.
    e.error = 0.0;
    return e;
}

double soft_mean_finite(int n, double gamma) {
    if (n < 1) throw std::invalid_argument("soft_mean_finite: N must be positive");
    const double n13 = std::cbrt(static_cast<double>(n));
    const auto [logl, sign] = laguerre_log(n - 1, 1.0, -gamma * gamma * n13);
    return sign * std::exp(-2.0 * gamma * n13 * n13 + gamma * gamma * n13 / 2.0 + logl);
}

double log_log_slope(const std::vector<double>& ns, const std::vector<double>& errors) {
    if (ns.size() != errors.size() || ns.size() < 2) throw std::invalid_argument("log_log_slope: need matching samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double lx = std::log(ns[i]);
        const double ly = std::log(std::abs(errors[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace rmtsf::gue
