#include "rmtsf/gue/sff.hpp"

#include "rmtsf/gue/form_factor.hpp"
#include "rmtsf/gue/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace rmtsf::gue {

double SffCurve::tau_global(std::size_t i) const { return k.at(i) * std::sqrt(2.0 * n); }
double SffCurve::tau_bulk(std::size_t i) const { return k.at(i) / (2.0 * std::sqrt(2.0 * n)); }

SffCurve sff_curve(int n, const std::vector<double>& k_grid, const AccuracyPolicy& policy) {
    if (n < 1) throw std::invalid_argument("sff_curve: N must be positive");
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        if (!(k_grid[i] >= 0.0) || (i > 0 && !(k_grid[i] > k_grid[i - 1]))) {
            throw std::invalid_argument("sff_curve: grid must be nonnegative and strictly increasing");
        }
    }
    SffCurve c;
    c.n = n;
    c.k = k_grid;
    for (double k : k_grid) {
        const Estimate s = sbar(n, k, policy);
        c.connected.push_back(s.value);
        c.connected_error.push_back(s.error);
        const double m = mean_form_factor(n, k);
        c.disconnected.push_back(m * m);
    }
    return c;
}

std::vector<double> uniform_grid(double kmax, int points) {
    if (points < 2 || !(kmax > 0.0)) throw std::invalid_argument("uniform_grid: need kmax > 0 and at least 2 points");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) g[i] = kmax * i / (points - 1);
    return g;
}

double dip_slope(int n, double kmin, double kmax, double step) {
    if (!(kmin > 0.0 && kmax > kmin && step > 0.0)) throw std::invalid_argument("dip_slope: bad window");
    auto d = [n](double k) {
        const double m = mean_form_factor(n, k);
        return m * m;
    };
    std::vector<double> ks;
    std::vector<double> peaks;
    double prev = d(kmin - step);
    double cur = d(kmin);
    for (double k = kmin; k <= kmax; k += step) {
        const double next = d(k + step);
        if (cur > prev && cur > next) {
            ks.push_back(k);
            peaks.push_back(cur);
        }
        prev = cur;
        cur = next;
    }
    if (ks.size() < 3) throw std::domain_error("dip_slope: fewer than three maxima in the window");
    return log_log_slope(ks, peaks);
}

}  // namespace rmtsf::gue
