#pragma once

#include "rmtsf/algebra/diff_operator.hpp"
#include "rmtsf/algebra/pi_laurent.hpp"

#include <string>
#include <vector>

namespace rmtsf {

enum class SeriesKind { FrobeniusAtZero, AsymptoticAtInfinity };

/// Truncated formal series in v with coefficients in Q[pi, 1/pi].
///
///   FrobeniusAtZero:      v^rho * sum_{m=0}^{T} a_m v^m      + O(v^{rho+T+1})
///   AsymptoticAtInfinity: v^rho * sum_{n=0}^{T} c_n v^{-2n}  + O(v^{rho-2T-2})
///
/// T is the truncation order; coefficients with index <= T are exact.
class FormalSeries {
public:
    FormalSeries(SeriesKind kind, Var v, Rational exponent, std::vector<PiLaurent> coeffs, int truncation);

    SeriesKind kind() const { return kind_; }
    Var variable() const { return var_; }
    const Rational& exponent() const { return exponent_; }
    int truncation() const { return truncation_; }
    /// Step in the exponent between consecutive coefficients (+1 or -2).
    int stride() const { return kind_ == SeriesKind::FrobeniusAtZero ? 1 : -2; }
    /// Coefficient of index m; throws beyond the truncation order.
    const PiLaurent& coefficient(int m) const;
    const std::vector<PiLaurent>& coefficients() const { return coeffs_; }

    FormalSeries operator-() const;
    /// Sum of two series of the same kind whose exponents differ by a multiple
    /// of the stride. The result is truncated at the first unknown order.
    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return a + (-b); }
    FormalSeries scaled(const PiLaurent& c) const;
    /// Same series with a smaller truncation order.
    FormalSeries truncated(int t) const;
    friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

    /// True if every retained coefficient is zero.
    bool is_zero() const;
    /// Index of the first nonzero coefficient, or -1.
    int valuation() const;

    /// Numeric value of the truncated sum (real rho only, v > 0).
    double evaluate(double v) const;

    std::string str() const;

private:
    SeriesKind kind_;
    Var var_;
    Rational exponent_;
    std::vector<PiLaurent> coeffs_;
    int truncation_;
};

/// Exact term-by-term application of op to s.
///
/// Coefficients of op must be real polynomials in the series variable and pi.
/// Writing each term of op as c pi^b v^a D^j, the result has exponent
/// rho + e_min (Frobenius) or rho + e_max (asymptotic) where e = a - j, and the
/// same truncation order T as the input: the op shifts the first unknown
/// exponent by e_min (resp. e_max), which is the truncation loss.
///
/// For asymptotic series every e_max - e must be even. Throws when the
/// result's truncation order is below required_truncation.
FormalSeries apply_series(const DiffOperator& op, const FormalSeries& s, int required_truncation = 0);

/// Falling factorial x (x-1) ... (x-j+1).
Rational falling_factorial(const Rational& x, int j);

}  // namespace rmtsf
