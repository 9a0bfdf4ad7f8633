#pragma once

#include "rmtsf/algebra/poly.hpp"

#include <string>

namespace rmtsf {

/// Quotient of two polynomials.
///
/// Reduction is complete whenever the denominator depends on at most one
/// indeterminate (the only case elimination produces): the gcd of the
/// denominator with every coefficient of the numerator, viewed as a polynomial
/// in that indeterminate, is cancelled. For multivariate denominators only
/// monomial factors, scalar content and exact quotients are cancelled.
/// The denominator is always primitive with a positive leading coefficient.
class RationalFn {
public:
    RationalFn() : den_(1) {}
    RationalFn(Poly num) : num_(std::move(num)), den_(1) { reduce(); }  // NOLINT(google-explicit-constructor)
    RationalFn(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFn operator-() const { return RationalFn(-num_, den_); }
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn&, const RationalFn&) = default;

    /// Derivative with respect to v (quotient rule).
    RationalFn derivative(Var v) const;

    std::string str() const;

private:
    void reduce();
    Poly num_;
    Poly den_;
};

}  // namespace rmtsf
