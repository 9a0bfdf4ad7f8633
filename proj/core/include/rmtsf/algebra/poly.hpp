#pragma once

// Sparse multivariate polynomials over Q(i) in a fixed set of indeterminates.
//
// The indeterminate universe is {X, k, z, pi, N}. Only N may carry negative
// exponents (Laurent in N); every other exponent is non-negative. Terms are
// kept in lexicographic order of the exponent vector (X, k, z, pi, N), so the
// serialized form of a polynomial is unique.

#include "rmtsf/algebra/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rmtsf {

enum class Var : std::uint8_t { X = 0, K = 1, Z = 2, Pi = 3, N = 4 };
inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::X, Var::K, Var::Z, Var::Pi, Var::N};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Monomial = std::array<int, kNumVars>;

inline int exponent(const Monomial& m, Var v) { return m[static_cast<std::size_t>(v)]; }
inline int& exponent(Monomial& m, Var v) { return m[static_cast<std::size_t>(v)]; }

class Poly {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Poly() = default;
    Poly(GaussianRational c);  // NOLINT(google-explicit-constructor)
    Poly(Rational c) : Poly(GaussianRational(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(GaussianRational(c)) {}   // NOLINT(google-explicit-constructor)

    static Poly var(Var v, int power = 1);
    static Poly term(GaussianRational c, const Monomial& m);
    static Poly from_terms(TermMap terms);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    /// Highest / lowest exponent of v over all terms; throws on the zero polynomial.
    int degree(Var v) const;
    int min_degree(Var v) const;
    /// True when no term involves v.
    bool free_of(Var v) const;
    /// The single variable the polynomial depends on, if it depends on at most one.
    std::optional<Var> sole_variable() const;

    GaussianRational coefficient(const Monomial& m) const;
    /// Coefficient of v^e, a polynomial in the remaining indeterminates.
    Poly coefficient_of(Var v, int e) const;
    std::map<int, Poly> collect(Var v) const;

    Poly derivative(Var v) const;
    /// Multiplies by v^delta.
    Poly shift(Var v, int delta) const;
    Poly shift(const Monomial& m, int sign = +1) const;
    /// Polynomial substitution v -> value (v must have non-negative exponents).
    Poly substitute(Var v, const Poly& value) const;

    bool is_real() const;
    Poly real_part() const;
    Poly imag_part() const;
    Poly conj() const;

    /// Coefficient of the lexicographically greatest monomial.
    const GaussianRational& leading_coefficient() const;
    const Monomial& leading_monomial() const;
    /// Componentwise minimum exponent over all terms.
    Monomial common_monomial() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const GaussianRational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
    friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(unsigned e) const;
    Poly map_coefficients(const std::function<GaussianRational(const GaussianRational&)>& f) const;

    /// Numeric evaluation; values are indexed by Var.
    std::complex<double> evaluate(const std::array<std::complex<double>, kNumVars>& values) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const GaussianRational& c);
    TermMap terms_;
};

/// Parses expressions such as "-3/2*pi^2*X^5 + 12*X^3 - i*N^-1".
/// Grammar: sum of signed products of rationals, the unit i, and
/// indeterminates with optional integer exponents. Parentheses may enclose a
/// scalar coefficient only, e.g. "(1/2-3*i)*X".
Poly parse_poly(std::string_view text);

/// Rational content of a polynomial: a positive rational c such that p / c has
/// coprime integer real and imaginary parts. Zero for the zero polynomial.
Rational rational_content(const Poly& p);
/// Joint content of several polynomials.
Rational rational_content(const std::vector<Poly>& ps);

/// Long division in v by a divisor whose leading coefficient in v is a scalar.
/// Returns {quotient, remainder} with deg_v(remainder) < deg_v(divisor).
std::pair<Poly, Poly> divide_in(const Poly& dividend, const Poly& divisor, Var v);

/// GCD of two polynomials that each depend on v only (constants allowed).
/// Result is monic; the gcd of 0 and 0 is 0.
Poly univariate_gcd(const Poly& a, const Poly& b, Var v);

}  // namespace rmtsf
