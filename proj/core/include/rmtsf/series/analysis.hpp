#pragma once

// Local solution structure of bulk operators: indicial roots and Frobenius
// series at X = 0, the non-oscillatory expansion at X = infinity, and the
// frequencies/decay rates of oscillatory solutions. Exact arithmetic only.

#include "rmtsf/algebra/diff_operator.hpp"
#include "rmtsf/algebra/formal_series.hpp"

#include <map>
#include <vector>

namespace rmtsf::series {

struct IndicialData {
    /// Coefficients of the indicial polynomial in rho, lowest degree first.
    std::vector<Rational> polynomial;
    /// Rational roots with multiplicity.
    std::map<Rational, int> roots;
    /// Factor left after removing the rational roots (constant if fully split).
    std::vector<Rational> unresolved;

    int root_count() const;
    std::vector<Rational> root_list() const;
};

struct AsymptoticExpansion {
    /// c_0 = 1, c_1, ..., c_{n_max}: f ~ sum_n c_n X^{-2n}.
    std::vector<PiLaurent> c;

    FormalSeries series() const;
};

struct OscillatoryExponent {
    int frequency;  // p in exp(+-2 pi i p X)
    Rational decay; // a in X^{-a}
    friend bool operator==(const OscillatoryExponent&, const OscillatoryExponent&) = default;
};

/// Indicial polynomial at X = 0 and its rational roots.
/// Throws if X = 0 is not a regular singular point.
IndicialData indicial_roots(const DiffOperator& op);

/// X^rho (1 + sum_{m=1}^{n_terms-1} a_m X^m). Throws on resonance, naming the shift.
FormalSeries frobenius(const DiffOperator& op, const Rational& rho, int n_terms);

/// 1 + sum_{n=1}^{n_max} c_n X^{-2n}. Throws if the constant is not a leading-order
/// solution or a pivot vanishes.
AsymptoticExpansion asymptotic_nonoscillatory(const DiffOperator& op, int n_max);

/// All (p, a) with exp(2 pi i p X) X^{-a} solving op to the two leading orders in 1/X.
std::vector<OscillatoryExponent> oscillatory_exponents(const DiffOperator& op);

}  // namespace rmtsf::series
