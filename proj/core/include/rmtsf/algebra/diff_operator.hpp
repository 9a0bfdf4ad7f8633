#pragma once

#include "rmtsf/algebra/poly.hpp"

#include <string>
#include <vector>

namespace rmtsf {

/// Linear differential operator sum_j p_j d^j/dv^j with polynomial coefficients.
/// Trailing zero coefficients are dropped, so order() is the index of the last
/// nonzero coefficient (-1 for the zero operator).
class DiffOperator {
public:
    explicit DiffOperator(Var v) : var_(v) {}
    DiffOperator(Var v, std::vector<Poly> coeffs);

    static DiffOperator identity(Var v);
    static DiffOperator derivative(Var v, int k = 1);
    static DiffOperator multiplication(Var v, Poly p);

    Var variable() const { return var_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Poly>& coefficients() const { return coeffs_; }
    /// p_j, or zero when j exceeds the order.
    const Poly& coefficient(int j) const;

    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

    /// Left multiplication by a polynomial.
    DiffOperator times(const Poly& p) const;

    /// Applies the operator to a polynomial in the operator variable.
    Poly apply(const Poly& f) const;

    /// Applies each coefficient map; used for substitutions that commute with d/dv.
    DiffOperator map_coefficients(const std::function<Poly(const Poly&)>& f) const;

    std::string str() const;

private:
    void trim();
    Var var_;
    std::vector<Poly> coeffs_;
};

/// (a o b) f = a(b f). Throws on mismatched variables.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

/// Canonical representative of the projective class of op: the common monomial
/// factor of all coefficients is removed, then the operator is scaled so every
/// coefficient has Gaussian-integer coefficients with collective gcd 1 and the
/// coefficient of the lexicographically greatest monomial of p_order is a
/// positive integer. Idempotent. Throws on the zero operator.
DiffOperator normalize(const DiffOperator& op);

/// True if a and b agree up to a nonzero Q(i) scalar factor and a common monomial.
bool projectively_equal(const DiffOperator& a, const DiffOperator& b);

}  // namespace rmtsf
