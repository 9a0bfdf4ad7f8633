#pragma once

// Correlation kernels: finite-N GUE and LUE kernels (Christoffel-Darboux form
// with a summed form near the diagonal) and the hard- and soft-edge limits.

#include "rmtsf/gue/orthopoly.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace rmtsf::gue {

/// GUE kernel K_N(x, y) = sum_{n<N} psi_n(x) psi_n(y) / (p_n, p_n) for weight exp(-x^2).
class GueKernel {
public:
    explicit GueKernel(int n);
    int size() const { return n_; }

    double operator()(double x, double y) const;
    /// K_N(x, x), the eigenvalue density.
    double diagonal(double x) const;
    double christoffel_darboux(double x, double y) const;
    double summed(double x, double y) const;
    /// Partial derivative in the first argument, from the summed form.
    double d_first(double x, double y) const;

    /// psi_n(x) / sqrt((p_{N-1}, p_{N-1})) for n in {N-1, N}.
    double scaled_psi(int n, double x) const;

private:
    int n_;
};

/// LUE kernel for weight x^a exp(-x) on (0, inf), real or complex arguments.
class LueKernel {
public:
    explicit LueKernel(int n, double a = 0.0);
    int size() const { return n_; }
    double parameter() const { return a_; }

    template <class T>
    T operator()(T x, T y) const {
        const double scale = std::abs(x) + std::abs(y) + 1.0;
        if (std::abs(x - y) < 1e-3 * scale) return summed(x, y);
        return christoffel_darboux(x, y);
    }
    template <class T>
    T diagonal(T x) const {
        return summed(x, x);
    }

    template <class T>
    T summed(T x, T y) const {
        const auto lx = laguerre_all<T>(n_ - 1, a_, x);
        const auto ly = laguerre_all<T>(n_ - 1, a_, y);
        T s(0);
        for (int k = 0; k < n_; ++k) s += T(std::exp(log_norm_ratio(k))) * lx[k] * ly[k];
        return s * weight_root(x) * weight_root(y);
    }

    template <class T>
    T christoffel_darboux(T x, T y) const {
        const auto lx = laguerre_all<T>(n_, a_, x);
        const auto ly = laguerre_all<T>(n_, a_, y);
        // Orthonormal l_n = sqrt(n!/Gamma(n+a+1)) w^{1/2} L_n.
        const T cn = T(std::exp(0.5 * log_norm_ratio(n_)));
        const T cm = T(std::exp(0.5 * log_norm_ratio(n_ - 1)));
        const T num = cn * cm * (lx[n_] * ly[n_ - 1] - lx[n_ - 1] * ly[n_]);
        return T(-std::sqrt(static_cast<double>(n_) * (n_ + a_))) * num / (x - y) * weight_root(x) * weight_root(y);
    }

private:
    double log_norm_ratio(int k) const { return std::lgamma(k + 1.0) - std::lgamma(k + a_ + 1.0); }
    template <class T>
    T weight_root(T x) const {
        if (a_ == 0.0) return std::exp(-x / T(2));
        return std::pow(x, T(a_ / 2)) * std::exp(-x / T(2));
    }

    int n_;
    double a_;
};

/// Hard-edge (a = 0) limit of K_N^L(x/4N, y/4N)/4N, in the squared variables x, y >= 0.
class HardEdgeKernel {
public:
    double operator()(double x, double y) const;
    double diagonal(double x) const;
};

/// Soft-edge Airy kernel.
class SoftEdgeKernel {
public:
    double operator()(double x, double y) const;
    /// Ai'(x)^2 - x Ai(x)^2.
    double diagonal(double x) const;
};

}  // namespace rmtsf::gue
