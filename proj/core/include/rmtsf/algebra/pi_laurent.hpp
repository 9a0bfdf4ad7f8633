#pragma once

#include "rmtsf/algebra/poly.hpp"
#include "rmtsf/algebra/rational.hpp"

#include <map>
#include <string>

namespace rmtsf {

/// Exact value of the form sum_k q_k pi^k with rational q_k and integer k
/// (negative powers allowed). Used for series coefficients such as
/// -1/(6 pi^2) and for structure-function coefficients.
class PiLaurent {
public:
    PiLaurent() = default;
    PiLaurent(Rational q, int pi_power = 0);  // NOLINT(google-explicit-constructor)
    PiLaurent(long q) : PiLaurent(Rational(q)) {}  // NOLINT(google-explicit-constructor)
    PiLaurent(int q) : PiLaurent(Rational(q)) {}   // NOLINT(google-explicit-constructor)

    /// From a real polynomial in pi alone.
    static PiLaurent from_poly(const Poly& p);
    /// Back to a polynomial; throws if a negative power of pi is present.
    Poly to_poly() const;

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True if at most one power of pi is present.
    bool is_monomial() const { return terms_.size() <= 1; }
    /// Rational coefficient of pi^k.
    Rational coefficient(int k) const;

    PiLaurent operator-() const;
    PiLaurent& operator+=(const PiLaurent& o);
    PiLaurent& operator-=(const PiLaurent& o);
    friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
    friend PiLaurent operator-(PiLaurent a, const PiLaurent& b) { return a -= b; }
    friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b);
    friend bool operator==(const PiLaurent&, const PiLaurent&) = default;

    PiLaurent scaled(const Rational& r) const;
    PiLaurent times_pi(int k) const;
    /// Division by a single-term value.
    PiLaurent divided_by(const PiLaurent& monomial) const;

    double to_double() const;
    std::string str() const;

private:
    std::map<int, Rational> terms_;
};

}  // namespace rmtsf
