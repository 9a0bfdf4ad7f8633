#include "rmtsf/gue/orthopoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmtsf::gue {

std::vector<double> hermite_functions(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_functions: negative degree");
    std::vector<double> phi(static_cast<std::size_t>(n) + 1);
    phi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (n >= 1) phi[1] = std::sqrt(2.0) * x * phi[0];
    for (int k = 1; k < n; ++k) {
        phi[k + 1] = std::sqrt(2.0 / (k + 1)) * x * phi[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * phi[k - 1];
    }
    return phi;
}

double gue_log_norm(int n) { return 0.5 * std::log(std::numbers::pi) - n * std::log(2.0) + std::lgamma(n + 1.0); }

double lue_log_norm(int n, double a) { return std::lgamma(n + 1.0) + std::lgamma(a + n + 1.0); }

std::pair<double, int> laguerre_log(int n, double a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_log: negative degree");
    long double prev = 1.0L;
    long double cur = (n == 0) ? 1.0L : static_cast<long double>(1.0 + a - x);
    long double log_scale = 0.0L;
    for (int k = 1; k < n; ++k) {
        long double next = ((2.0L * k + 1.0L + a - x) * cur - (k + a) * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
        const long double m = std::fabs(cur);
        if (m > 1e300L || (m < 1e-300L && m > 0)) {
            const long double l = std::log(m);
            log_scale += l;
            cur /= m;
            prev /= m;
        }
    }
    if (cur == 0.0L) return {-INFINITY, 0};
    return {static_cast<double>(log_scale + std::log(std::fabs(cur))), cur > 0 ? 1 : -1};
}

Rational laguerre_exact(int n, const Rational& a, const Rational& x) {
    Rational prev(1);
    if (n == 0) return prev;
    Rational cur = Rational(1) + a - x;
    for (int k = 1; k < n; ++k) {
        Rational next = ((Rational(2 * k + 1) + a - x) * cur - (Rational(k) + a) * prev) / Rational(k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational hermite_exact(int n, const Rational& x) {
    Rational prev(1);
    if (n == 0) return prev;
    Rational cur = Rational(2) * x;
    for (int k = 1; k < n; ++k) {
        Rational next = Rational(2) * x * cur - Rational(2 * k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double hyp2f1_terminating(int p, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < p; ++j) {
        term *= (j - p) * (b + j) / ((c + j) * (j + 1.0)) * z;
        sum += term;
    }
    return sum;
}

Rational hyp2f1_terminating_exact(int p, const Rational& b, const Rational& c, const Rational& z) {
    Rational term(1);
    Rational sum(1);
    for (int j = 0; j < p; ++j) {
        term *= Rational(j - p) * (b + Rational(j)) / ((c + Rational(j)) * Rational(j + 1)) * z;
        sum += term;
    }
    return sum;
}

}  // namespace rmtsf::gue
