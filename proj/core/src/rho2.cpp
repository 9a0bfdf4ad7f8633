#include "rmtsf/gue/rho2.hpp"

#include "rmtsf/gue/special_functions.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace rmtsf::gue {

namespace {

constexpr double kPi = std::numbers::pi;

// Near the origin sinc and Si are summed from their power series, which makes
// X = 0 a regular point.
constexpr double kSeriesRadius = 1.0;
constexpr int kSeriesTerms = 24;

Jet sinc_jet(const Jet& u) {
    if (std::abs(u.value()) >= kSeriesRadius) return sin(u) / u;
    // sum_m (-1)^m u^{2m} / (2m+1)!
    const Jet u2 = u * u;
    std::vector<double> c(kSeriesTerms);
    double f = 1.0;
    for (int m = 0; m < kSeriesTerms; ++m) {
        if (m > 0) f *= (2.0 * m) * (2.0 * m + 1.0);
        c[m] = (m % 2 ? -1.0 : 1.0) / f;
    }
    Jet r(u.order(), c.back());
    for (int m = kSeriesTerms - 2; m >= 0; --m) r = r * u2 + c[m];
    return r;
}

Jet truncated(const Jet& j, std::size_t order) {
    std::vector<double> v(order + 1);
    for (std::size_t k = 0; k <= order; ++k) v[k] = j[k];
    return Jet(std::move(v));
}

/// Si(u(h)) from d/dh Si(u) = sinc(u) u'.
Jet sine_integral_jet(const Jet& u) {
    if (std::abs(u.value()) < kSeriesRadius) {
        // sum_m (-1)^m u^{2m+1} / ((2m+1) (2m+1)!)
        const Jet u2 = u * u;
        std::vector<double> c(kSeriesTerms);
        double f = 1.0;
        for (int m = 0; m < kSeriesTerms; ++m) {
            if (m > 0) f *= (2.0 * m) * (2.0 * m + 1.0);
            c[m] = (m % 2 ? -1.0 : 1.0) / ((2.0 * m + 1.0) * f);
        }
        Jet r(u.order(), c.back());
        for (int m = kSeriesTerms - 2; m >= 0; --m) r = r * u2 + c[m];
        return r * u;
    }
    if (u.order() == 0) return Jet(0, sf::sine_integral(u.value()));
    const Jet integrand = sinc_jet(truncated(u, u.order() - 1)) * u.differentiated();
    return integrand.integrated(sf::sine_integral(u.value()));
}

// 1 - sinc(2 pi X)^2 + (1/2pi) (d/dX sinc(2 pi X)) (shift + Si(2 pi X))
Jet beta4_family(double x, std::size_t order, double shift) {
    const Jet X = Jet::variable(order + 1, x);
    const Jet u = X * (2.0 * kPi);
    const Jet s = sinc_jet(u);
    const Jet ds = s.differentiated();
    const Jet si = truncated(sine_integral_jet(u), order);
    const Jet s0 = truncated(s, order);
    return 1.0 - s0 * s0 + ds * (si + shift) * (1.0 / (2.0 * kPi));
}

void check_x(double x, bool nonnegative) {
    if (!std::isfinite(x)) throw std::domain_error("rho2: X must be finite");
    if (nonnegative && x < 0.0) throw std::domain_error("rho2: the beta = 1 form is defined for X >= 0");
}

}  // namespace

Jet rho2_jet(int beta, double x, std::size_t order) {
    check_x(x, beta == 1);
    switch (beta) {
        case 2: {
            const Jet s = sinc_jet(Jet::variable(order, x) * kPi);
            return 1.0 - s * s;
        }
        case 4:
            return beta4_family(x, order, 0.0);
        case 1:
            // rho(Y) = R(Y/2)
            return beta1_companion_jet(x / 2.0, order).rescaled(0.5);
        default:
            throw std::invalid_argument("rho2: closed form available for beta in {1, 2, 4} only");
    }
}

double rho2_closed(int beta, double x) { return rho2_jet(beta, x, 0).value(); }

Jet beta1_companion_jet(double x, std::size_t order) {
    check_x(x, true);
    return beta4_family(x, order, -kPi / 2.0);
}

OdeResidual ode_residual(const DiffOperator& op, double x, const Jet& f) {
    if (static_cast<int>(f.order()) < op.order()) throw std::invalid_argument("ode_residual: jet order too low");
    std::array<std::complex<double>, kNumVars> vals{};
    vals[static_cast<std::size_t>(op.variable())] = x;
    vals[static_cast<std::size_t>(Var::Pi)] = kPi;
    double sum = 0.0;
    double scale = 0.0;
    for (int j = 0; j <= op.order(); ++j) {
        const std::complex<double> p = op.coefficient(j).evaluate(vals);
        if (std::abs(p.imag()) > 1e-12 * (1.0 + std::abs(p.real()))) {
            throw std::domain_error("ode_residual: operator has non-real coefficients");
        }
        const double t = p.real() * f.derivative(static_cast<std::size_t>(j));
        sum += t;
        scale += std::abs(t);
    }
    OdeResidual r;
    r.absolute = std::abs(sum);
    r.relative = scale > 0.0 ? r.absolute / scale : 0.0;
    return r;
}

Jet structure_function_jet(int beta, double k, std::size_t order) {
    if (!(k > 0.0)) throw std::domain_error("structure_function_jet: k must be positive");
    const Jet K = Jet::variable(order, k);
    if (beta == 2) {
        if (k >= 2 * kPi) throw std::domain_error("structure_function_jet: k outside (0, 2 pi)");
        return K * (1.0 / (2 * kPi));
    }
    if (beta != 4) throw std::invalid_argument("structure_function_jet: beta must be 2 or 4");
    if (k >= 4 * kPi || k == 2 * kPi) throw std::domain_error("structure_function_jet: k outside (0, 4 pi) or at 2 pi");
    Jet arg = 1.0 - K * (1.0 / (2 * kPi));
    if (arg.value() < 0.0) arg = -arg;
    return K * (1.0 / (4 * kPi)) - K * (1.0 / (8 * kPi)) * log(arg);
}

}  // namespace rmtsf::gue
