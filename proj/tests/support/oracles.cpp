#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/laguerre.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

constexpr double kPi = std::numbers::pi;

double gue_cutoff(int n) { return std::sqrt(2.0 * n + 1.0) + 7.0; }

// Values phi_j(x_i) for all nodes, row-major by node.
std::vector<double> hermite_table(int n, const Rule& r) {
    std::vector<double> t(r.x.size() * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        for (int j = 0; j < n; ++j) t[i * n + j] = hermite_function(j, r.x[i]);
    }
    return t;
}

double kernel_from_table(int n, const std::vector<double>& t, std::size_t i, std::size_t j) {
    double s = 0.0;
    for (int m = 0; m < n; ++m) s += t[i * n + m] * t[j * n + m];
    return s;
}

struct AiryTable {
    std::vector<double> ai, aip;
};

AiryTable airy_table(const Rule& r) {
    AiryTable t;
    for (double x : r.x) {
        t.ai.push_back(boost::math::airy_ai(x));
        t.aip.push_back(boost::math::airy_ai_prime(x));
    }
    return t;
}

double airy_from_table(const Rule& r, const AiryTable& t, std::size_t i, std::size_t j) {
    if (i == j) return t.aip[i] * t.aip[i] - r.x[i] * t.ai[i] * t.ai[i];
    return (t.ai[i] * t.aip[j] - t.aip[i] * t.ai[j]) / (r.x[i] - r.x[j]);
}

Rule soft_rule(double gmin) { return gauss_legendre(-(40.0 / gmin + 10.0), 12.0, 0.5); }

}  // namespace

Rule gauss_legendre(double a, double b, double width) {
    using G = boost::math::quadrature::gauss<double, 20>;
    const auto& abs = G::abscissa();
    const auto& wts = G::weights();
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
    const double h = (b - a) / panels;
    Rule r;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (std::size_t i = 0; i < abs.size(); ++i) {
            r.x.push_back(mid - 0.5 * h * abs[i]);
            r.w.push_back(0.5 * h * wts[i]);
            r.x.push_back(mid + 0.5 * h * abs[i]);
            r.w.push_back(0.5 * h * wts[i]);
        }
    }
    return r;
}

double hermite_function(int n, double x) {
    const double norm = std::sqrt(std::pow(2.0, n) * boost::math::factorial<double>(n) * std::sqrt(kPi));
    return boost::math::hermite(n, x) * std::exp(-x * x / 2) / norm;
}

double gue_kernel(int n, double x, double y) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += hermite_function(j, x) * hermite_function(j, y);
    return s;
}

double mean(int n, double k) {
    const double L = gue_cutoff(n);
    const Rule r = gauss_legendre(-L, L, 0.25);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::cos(k * r.x[i]) * gue_kernel(n, r.x[i], r.x[i]);
    return s;
}

double moment(int n, int p) {
    const double L = gue_cutoff(n) + p;
    const Rule r = gauss_legendre(-L, L, 0.25);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::pow(r.x[i], 2 * p) * gue_kernel(n, r.x[i], r.x[i]);
    return s;
}

namespace {

// int int exp(i k1 x - i k2 y) K(x, y)^2 dx dy; the sine part vanishes by parity.
double squared_kernel_transform(int n, double k1, double k2) {
    const double L = gue_cutoff(n);
    const Rule r = gauss_legendre(-L, L, 0.5);
    const auto t = hermite_table(n, r);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < r.x.size(); ++j) {
            const double k = kernel_from_table(n, t, i, j);
            row += r.w[j] * std::cos(k1 * r.x[i] - k2 * r.x[j]) * k * k;
        }
        s += r.w[i] * row;
    }
    return s;
}

}  // namespace

double covariance(int n, double k1, double k2) { return mean(n, k1 - k2) - squared_kernel_transform(n, k1, k2); }

double connected(int n, double k) { return n - squared_kernel_transform(n, k, k); }

double lue_kernel(int n, double x, double y) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += boost::math::laguerre(static_cast<unsigned>(j), x) * boost::math::laguerre(static_cast<unsigned>(j), y);
    return std::exp(-(x + y) / 2) * s;
}

double half_line(int n, double k1) {
    const double S = std::sqrt(2.0 * (4.0 * n + 60.0)) + std::abs(k1);
    const Rule r = gauss_legendre(0.0, S, 0.25);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        const double t1 = k1 + r.x[i];
        const double t2 = r.x[i];
        s += r.w[i] * (t1 + t2) / 2 * lue_kernel(n, t1 * t1 / 2, t2 * t2 / 2);
    }
    return s;
}

double airy_kernel(double x, double y) {
    using boost::math::airy_ai;
    using boost::math::airy_ai_prime;
    if (x == y) return airy_ai_prime(x) * airy_ai_prime(x) - x * airy_ai(x) * airy_ai(x);
    return (airy_ai(x) * airy_ai_prime(y) - airy_ai_prime(x) * airy_ai(y)) / (x - y);
}

double soft_mean(double g) {
    const Rule r = soft_rule(g);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::exp(g * r.x[i]) * airy_kernel(r.x[i], r.x[i]);
    return s;
}

double soft_covariance(double g1, double g2) {
    const Rule r = soft_rule(std::min(g1, g2));
    const AiryTable t = airy_table(r);
    double one = 0.0;
    double two = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        one += r.w[i] * std::exp((g1 + g2) * r.x[i]) * airy_from_table(r, t, i, i);
        double row = 0.0;
        for (std::size_t j = 0; j < r.x.size(); ++j) {
            const double k = airy_from_table(r, t, i, j);
            row += r.w[j] * std::exp(g2 * r.x[j]) * k * k;
        }
        two += r.w[i] * std::exp(g1 * r.x[i]) * row;
    }
    return one - two;
}

double gue_exp_covariance(int n, double a, double b) {
    const double L = gue_cutoff(n) + std::abs(a) + std::abs(b);
    const Rule r = gauss_legendre(-L, L, 0.5);
    const auto t = hermite_table(n, r);
    double one = 0.0;
    double two = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        one += r.w[i] * std::exp((a + b) * r.x[i]) * kernel_from_table(n, t, i, i);
        double row = 0.0;
        for (std::size_t j = 0; j < r.x.size(); ++j) {
            const double k = kernel_from_table(n, t, i, j);
            row += r.w[j] * std::exp(b * r.x[j]) * k * k;
        }
        two += r.w[i] * std::exp(a * r.x[i]) * row;
    }
    return one - two;
}

double gue_symmetric_form(int n, double a, double b) {
    const double L = gue_cutoff(n) + std::abs(a) + std::abs(b);
    const Rule r = gauss_legendre(-L, L, 0.5);
    const auto t = hermite_table(n, r);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < r.x.size(); ++j) {
            const double k = kernel_from_table(n, t, i, j);
            row += r.w[j] * (std::exp(a * r.x[i]) - std::exp(a * r.x[j])) * (std::exp(b * r.x[i]) - std::exp(b * r.x[j])) * k * k;
        }
        s += r.w[i] * row;
    }
    return s;
}

double loglog_slope(const std::vector<double>& n, const std::vector<double>& e) {
    if (n.size() != e.size() || n.size() < 2) throw std::invalid_argument("loglog_slope: need two or more points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double x = std::log(n[i]);
        const double y = std::log(std::abs(e[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace oracle
