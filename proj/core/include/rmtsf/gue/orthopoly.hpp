#pragma once

// Three-term recurrences for the Hermite (GUE) and Laguerre (LUE) systems.
//
// GUE: weight exp(-x^2), monic p_n = 2^{-n} H_n, (p_n, p_n) = sqrt(pi) 2^{-n} n!.
// LUE: weight x^a exp(-x), monic p_n = (-1)^n n! L_n^{(a)}, (p_n, p_n) = Gamma(n+1) Gamma(a+n+1).
// psi_n = sqrt(w) p_n. Orthonormal versions are used internally to avoid overflow.

#include "rmtsf/algebra/rational.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace rmtsf::gue {

/// Orthonormal Hermite functions phi_0..phi_n at x.
std::vector<double> hermite_functions(int n, double x);

/// log (p_n, p_n) for the GUE.
double gue_log_norm(int n);
/// log (p_n, p_n) for the LUE with parameter a.
double lue_log_norm(int n, double a);

/// Laguerre polynomials L_0^{(a)}..L_n^{(a)} at x (real or complex).
template <class T>
std::vector<T> laguerre_all(int n, double a, T x) {
    std::vector<T> L(static_cast<std::size_t>(n) + 1);
    L[0] = T(1);
    if (n >= 1) L[1] = T(1.0 + a) - x;
    for (int k = 1; k < n; ++k) {
        L[k + 1] = ((T(2.0 * k + 1.0 + a) - x) * L[k] - T(k + a) * L[k - 1]) / T(k + 1.0);
    }
    return L;
}

template <class T>
T laguerre(int n, double a, T x) {
    return laguerre_all<T>(n, a, x).back();
}

/// log|L_n^{(a)}(x)| and its sign, with rescaling so large n and |x| cannot overflow.
std::pair<double, int> laguerre_log(int n, double a, double x);

/// Exact L_n^{(a)}(x) for rational a and x.
Rational laguerre_exact(int n, const Rational& a, const Rational& x);
/// Exact H_n(x) (physicists' normalization).
Rational hermite_exact(int n, const Rational& x);

/// Terminating 2F1(-p, b; c; z) in floating point.
double hyp2f1_terminating(int p, double b, double c, double z);
/// Terminating 2F1(-p, b; c; z) exactly.
Rational hyp2f1_terminating_exact(int p, const Rational& b, const Rational& c, const Rational& z);

}  // namespace rmtsf::gue
