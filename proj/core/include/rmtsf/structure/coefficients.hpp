#pragma once

// Small-k structure-function coefficients of the circular beta-ensemble and
// the palindromic polynomial fixing the k^10 coefficient of f(k; beta).
//
// Notation: x = beta/2, f(k; beta) = (pi beta/|k|) S(k; beta), and
// S(k; beta) = sum_p alpha_p |k|^p for small k.

#include "rmtsf/algebra/pi_laurent.hpp"
#include "rmtsf/series/analysis.hpp"

#include <array>
#include <complex>
#include <map>
#include <vector>

namespace rmtsf::structure {

struct SmallKExpansion {
    Rational beta;
    /// alpha_p for the odd p determined by the non-oscillatory expansion.
    std::map<int, PiLaurent> alpha;

    /// [k^j] f(k; beta) = pi beta alpha_{j+1} (j even).
    PiLaurent f_coefficient(int j) const;
};

/// alpha_{2n-1} = pi (-1)^n c_n / (2n-1)! for n = 1..c.size()-1.
SmallKExpansion small_k_from_cn(const series::AsymptoticExpansion& c, const Rational& beta);

/// Inverse map: c_n from [k^{2n-2}] f(k; beta).
PiLaurent cn_from_f_coefficient(int n, const Rational& beta, const PiLaurent& f_coeff);

/// Degree-8 palindromic polynomial sum_l b_l x^l, stored by its free half b_0..b_4.
class PalindromicPoly {
public:
    explicit PalindromicPoly(std::array<Rational, 5> half);
    static PalindromicPoly from_full(const std::vector<Rational>& b);

    const Rational& operator[](int l) const;
    std::vector<Rational> coefficients() const;
    Rational evaluate(const Rational& x) const;
    friend bool operator==(const PalindromicPoly&, const PalindromicPoly&) = default;

private:
    std::array<Rational, 5> half_;
};

/// Sextic factor of the k^8 coefficient (palindromic, leading coefficient 1).
std::vector<Rational> k8_factor();

/// (1/(2 pi x))^8 (x-1)^2 Q6(x). Throws for x = 0.
PiLaurent k8_coefficient(const Rational& x);

/// (1/(2 pi x))^10 (x-1)^2 P(x). Throws for x = 0.
PiLaurent k10_coefficient(const PalindromicPoly& p, const Rational& x);

/// b_{10,1} from the expansion about beta = 0: 2 - 2 sum_{q=1}^{11} (1 - 2^{q-11})/q.
Rational b1_from_small_beta();

/// One linear constraint sum_{l=0}^{8} weight_l b_l = rhs.
struct LinearConstraint {
    const char* name;
    std::array<Rational, 9> weight;
    Rational rhs;
};

/// The constraints fixing b_0..b_4: leading coefficient, small-beta expansion,
/// beta = 1 Fourier transform, beta = 4 derivative, beta = 6 asymptotics.
std::vector<LinearConstraint> k10_constraints();

/// Exact solve of a dense square system; throws std::domain_error if singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

struct K10Solution {
    PalindromicPoly b;
    /// b_1 .. b_4 solved from all four non-trivial constraints at once.
    std::array<Rational, 4> overdetermined;
    /// Residual of each constraint at b (all zero when consistent).
    std::vector<Rational> residuals;
};

/// b_0 = 1 and b_1 from the small-beta expansion; b_2..b_4 from the remaining
/// three constraints.
K10Solution solve_k10();

/// Closed forms of S(k; beta) for beta = 2 and 4 (even in k).
double closed_form_S(int beta, double k);

struct ZeroReport {
    std::vector<std::complex<double>> roots;
    double max_deviation = 0.0;  // max | |root| - 1 |
};

/// Roots of a real polynomial (lowest degree first) via a companion matrix.
ZeroReport zeros_on_unit_circle(const std::vector<Rational>& coeffs);

/// True if, sorted by argument, the upper-half-plane roots of inner and outer
/// alternate with outer first and last.
bool interlaced(const ZeroReport& inner, const ZeroReport& outer);

}  // namespace rmtsf::structure
