#pragma once

#include "rmtsf/gue/quadrature.hpp"

#include <vector>

namespace rmtsf::gue {

/// Connected and disconnected parts of the GUE spectral form factor on a k grid.
struct SffCurve {
    int n = 0;
    std::vector<double> k;
    std::vector<double> connected;
    std::vector<double> connected_error;
    std::vector<double> disconnected;

    /// Global scaling variable k sqrt(2N).
    double tau_global(std::size_t i) const;
    /// Bulk scaling variable k / (2 sqrt(2N)).
    double tau_bulk(std::size_t i) const;
};

/// Throws std::invalid_argument unless the grid is nonnegative and strictly increasing.
SffCurve sff_curve(int n, const std::vector<double>& k_grid, const AccuracyPolicy& policy = {});

/// Uniform grid of `points` values from 0 to kmax inclusive.
std::vector<double> uniform_grid(double kmax, int points);

/// Log-log slope of the local maxima of the disconnected part |<sum e^{ik lambda}>|^2
/// for k in [kmin, kmax]. The maxima are located on a grid of spacing `step`.
double dip_slope(int n, double kmin, double kmax, double step = 1e-3);

}  // namespace rmtsf::gue
