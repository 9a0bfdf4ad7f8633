#include "rmtsf/gue/form_factor.hpp"

#include "rmtsf/gue/kernels.hpp"
#include "rmtsf/gue/orthopoly.hpp"

#include <boost/math/differentiation/finite_difference.hpp>

#include <cmath>
#include <stdexcept>

namespace rmtsf::gue {

namespace {

void check_n(int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": N must be positive");
}

template <class F>
double derivative(F f, double x) {
    return boost::math::differentiation::finite_difference_derivative<F, double, 8>(f, x);
}

AccuracyPolicy paneled(AccuracyPolicy p, double width) {
    if (p.panel_width <= 0.0) p.panel_width = width;
    return p;
}

}  // namespace

double mean_form_factor(int n, double k) {
    check_n(n, "mean_form_factor");
    return std::exp(-k * k / 4.0) * laguerre<double>(n - 1, 1.0, k * k / 2.0);
}

std::complex<double> mean_form_factor(int n, std::complex<double> k) {
    check_n(n, "mean_form_factor");
    return std::exp(-k * k / 4.0) * laguerre<std::complex<double>>(n - 1, 1.0, k * k / 2.0);
}

Rational moments_2p(int n, int p) {
    check_n(n, "moments_2p");
    if (p < 0) throw std::invalid_argument("moments_2p: negative order");
    // Gamma(1/2 + p) / Gamma(1/2) = (2p-1)!! / 2^p
    Rational pre(1);
    for (int j = 1; j <= p; ++j) pre *= Rational(2 * j - 1, 2);
    Rational s(0);
    for (int l = 0; l <= p; ++l) {
        const mpz_class term = binomial(p, p - l) * binomial(n, l + 1) * (mpz_class(1) << l);
        s += Rational(term);
    }
    return pre * s;
}

Rational moments_2p_hypergeometric(int n, int p) {
    check_n(n, "moments_2p_hypergeometric");
    if (p < 0) throw std::invalid_argument("moments_2p_hypergeometric: negative order");
    Rational pre(n);
    for (int j = 1; j <= p; ++j) pre *= Rational(2 * j - 1, 2);
    return pre * hyp2f1_terminating_exact(p, Rational(1 - n), Rational(2), Rational(2));
}

Estimate sbar(int n, double k, const AccuracyPolicy& policy) {
    check_n(n, "sbar");
    if (!std::isfinite(k)) throw std::domain_error("sbar: non-finite k");
    // With u = t^2/2 the integral becomes int_0^{k^2/2} K^L(u, u) du.
    const LueKernel K(n);
    return require(integrate([&](double u) { return K.diagonal(u); }, 0.0, k * k / 2.0, paneled(policy, 1.0)), "sbar");
}

std::complex<double> h_kernel(int n, std::complex<double> t1, std::complex<double> t2) {
    const LueKernel K(n);
    return (t1 + t2) / 2.0 * K(t1 * t1 / 2.0, t2 * t2 / 2.0);
}

double h_kernel(int n, double t1, double t2) {
    const LueKernel K(n);
    return (t1 + t2) / 2.0 * K(t1 * t1 / 2.0, t2 * t2 / 2.0);
}

ComplexEstimate cov_phase(int n, std::complex<double> k1, std::complex<double> k2, const AccuracyPolicy& policy) {
    check_n(n, "cov_phase");
    const LueKernel K(n);
    const std::complex<double> d = k1 - k2;
    auto f = [&](std::complex<double> s) {
        const std::complex<double> t1 = d + s;
        return (t1 + s) / 2.0 * K(t1 * t1 / 2.0, s * s / 2.0);
    };
    // Oscillation scale in s is about 1/sqrt(N); panels are in the unit parameter.
    const double width = 1.0 / std::max(1.0, std::abs(k2) * std::sqrt(static_cast<double>(n)));
    ComplexEstimate e = integrate_segment(f, k2, paneled(policy, width));
    if (!e.converged) {
        throw QuadratureError("cov_phase: quadrature did not converge", {e.value.real(), e.error, false});
    }
    return e;
}

Estimate half_line_transform(int n, double k1, const AccuracyPolicy& policy) {
    check_n(n, "half_line_transform");
    const LueKernel K(n);
    // exp(-x/2) L_n(x) decays once x exceeds the oscillatory region [0, 4N].
    const double cutoff = std::sqrt(2.0 * (4.0 * n + 90.0)) + std::abs(k1);
    auto f = [&](double s) { return (k1 + 2.0 * s) / 2.0 * K((k1 + s) * (k1 + s) / 2.0, s * s / 2.0); };
    return require(integrate(f, 0.0, cutoff, paneled(policy, 1.0 / std::sqrt(static_cast<double>(n)))),
                   "half_line_transform");
}

double diff_identity_residual(int n, double x, double y) {
    check_n(n, "diff_identity_residual");
    const GueKernel K(n);
    const double lhs = derivative([&](double s) { return K.summed(s, y); }, x) +
                       derivative([&](double s) { return K.summed(x, s); }, y);
    const double rhs = -(K.scaled_psi(n, x) * K.scaled_psi(n - 1, y) + K.scaled_psi(n - 1, x) * K.scaled_psi(n, y));
    return std::abs(lhs - rhs);
}

double diagonal_identity_residual(int n, double t) {
    check_n(n, "diagonal_identity_residual");
    const GueKernel K(n);
    const double lhs = derivative([&](double s) { return K.diagonal(s); }, t);
    const double rhs = -2.0 * K.scaled_psi(n, t) * K.scaled_psi(n - 1, t);
    return std::abs(lhs - rhs);
}

}  // namespace rmtsf::gue
