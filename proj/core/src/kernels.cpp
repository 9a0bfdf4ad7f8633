#include "rmtsf/gue/kernels.hpp"

#include "rmtsf/gue/special_functions.hpp"

#include <cmath>

namespace rmtsf::gue {

GueKernel::GueKernel(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("GueKernel: N must be positive");
}

double GueKernel::operator()(double x, double y) const {
    if (std::abs(x - y) < 1e-3 * (1.0 + std::abs(x) + std::abs(y))) return summed(x, y);
    return christoffel_darboux(x, y);
}

double GueKernel::diagonal(double x) const { return summed(x, x); }

double GueKernel::christoffel_darboux(double x, double y) const {
    const auto px = hermite_functions(n_, x);
    const auto py = hermite_functions(n_, y);
    return std::sqrt(n_ / 2.0) * (px[n_] * py[n_ - 1] - px[n_ - 1] * py[n_]) / (x - y);
}

double GueKernel::summed(double x, double y) const {
    const auto px = hermite_functions(n_ - 1, x);
    const auto py = hermite_functions(n_ - 1, y);
    double s = 0.0;
    for (int k = 0; k < n_; ++k) s += px[k] * py[k];
    return s;
}

double GueKernel::d_first(double x, double y) const {
    // phi_n' = -x phi_n + sqrt(2n) phi_{n-1}
    const auto px = hermite_functions(n_ - 1, x);
    const auto py = hermite_functions(n_ - 1, y);
    double s = 0.0;
    for (int k = 0; k < n_; ++k) {
        double d = -x * px[k];
        if (k > 0) d += std::sqrt(2.0 * k) * px[k - 1];
        s += d * py[k];
    }
    return s;
}

double GueKernel::scaled_psi(int n, double x) const {
    if (n != n_ && n != n_ - 1) throw std::invalid_argument("GueKernel::scaled_psi: index must be N-1 or N");
    const double phi = hermite_functions(n, x)[n];
    return phi * std::exp(0.5 * (gue_log_norm(n) - gue_log_norm(n_ - 1)));
}

LueKernel::LueKernel(int n, double a) : n_(n), a_(a) {
    if (n < 1) throw std::invalid_argument("LueKernel: N must be positive");
    if (!(a > -1.0)) throw std::invalid_argument("LueKernel: parameter must exceed -1");
}

double HardEdgeKernel::operator()(double x, double y) const {
    if (x < 0 || y < 0) throw std::domain_error("HardEdgeKernel: negative argument");
    if (std::abs(x - y) < 1e-6 * (1.0 + x + y)) return diagonal(0.5 * (x + y));
    const double X = std::sqrt(x);
    const double Y = std::sqrt(y);
    return (X * sf::bessel_j1(X) * sf::bessel_j0(Y) - Y * sf::bessel_j1(Y) * sf::bessel_j0(X)) / (2.0 * (x - y));
}

double HardEdgeKernel::diagonal(double x) const {
    if (x < 0) throw std::domain_error("HardEdgeKernel: negative argument");
    const double X = std::sqrt(x);
    const double j0 = sf::bessel_j0(X);
    const double j1 = sf::bessel_j1(X);
    return 0.25 * (j0 * j0 + j1 * j1);
}

double SoftEdgeKernel::operator()(double x, double y) const {
    if (std::abs(x - y) < 1e-6) {
        // First order in x - y vanishes by symmetry.
        return diagonal(0.5 * (x + y));
    }
    return (sf::airy_ai(x) * sf::airy_ai_prime(y) - sf::airy_ai(y) * sf::airy_ai_prime(x)) / (x - y);
}

double SoftEdgeKernel::diagonal(double x) const {
    const double a = sf::airy_ai(x);
    const double ap = sf::airy_ai_prime(x);
    return ap * ap - x * a * a;
}

}  // namespace rmtsf::gue
