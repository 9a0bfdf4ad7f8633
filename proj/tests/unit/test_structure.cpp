#include "rmtsf/ode/selberg.hpp"
#include "rmtsf/series/analysis.hpp"
#include "rmtsf/structure/coefficients.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace rmtsf;
using namespace rmtsf::structure;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

// (1/(2 pi))^p as an exact value
PiLaurent inv_two_pi(int p) { return PiLaurent(Rational(1, 1L << p), -p); }

// coefficients of prod (x^2 - 2 cos(t) x + 1) as exact rationals of cos(t) in {0, +-1/2}
std::vector<Rational> from_cosines(const std::vector<Rational>& cosines) {
    std::vector<Rational> p{r(1)};
    for (const auto& c : cosines) {
        std::vector<Rational> q(p.size() + 2, r(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i];
            q[i + 1] -= Rational(2) * c * p[i];
            q[i + 2] += p[i];
        }
        p = q;
    }
    return p;
}

}  // namespace

TEST_CASE("sextic factor of the k^8 coefficient") {
    const std::vector<Rational> expected{r(1),          r(-263, 84), r(1697, 315), r(-6337, 1008),
                                         r(1697, 315), r(-263, 84), r(1)};
    CHECK(k8_factor() == expected);
    CHECK_THROWS_AS(k8_coefficient(r(0)), std::domain_error);
}

TEST_CASE("k^10 polynomial") {
    const auto sol = solve_k10();
    const PalindromicPoly expected({r(1), r(-1523, 420), r(2529, 350), r(-256189, 25200), r(142463, 12600)});
    CHECK(sol.b == expected);
    for (int l = 0; l <= 8; ++l) CHECK(sol.b[l] == sol.b[8 - l]);
    for (const auto& res : sol.residuals) CHECK(res.is_zero());
    CHECK(sol.residuals.size() == k10_constraints().size());
    for (int l = 1; l <= 4; ++l) CHECK(sol.overdetermined[static_cast<std::size_t>(l - 1)] == sol.b[l]);
    CHECK(b1_from_small_beta() == r(-1523, 420));
    CHECK_THROWS_AS(k10_coefficient(sol.b, r(0)), std::domain_error);
}

TEST_CASE("beta = 2 and beta = 4 structure functions fix the coefficients") {
    const auto b = solve_k10().b;
    // beta = 2: f(k) = 1 for |k| < 2 pi
    CHECK(k8_coefficient(r(1)).is_zero());
    CHECK(k10_coefficient(b, r(1)).is_zero());
    // beta = 4: f(k) = 1 + (1/2) sum_m (k/2pi)^m / m
    CHECK(k8_coefficient(r(2)) == inv_two_pi(8).scaled(r(1, 16)));
    CHECK(k10_coefficient(b, r(2)) == inv_two_pi(10).scaled(r(1, 20)));
}

TEST_CASE("coefficients reproduce the large-X expansion") {
    const auto c6 = series::asymptotic_nonoscillatory(ode::circular_bulk_operator(6), 6);
    const auto b = solve_k10().b;
    CHECK(cn_from_f_coefficient(5, r(6), k8_coefficient(r(3))) == c6.c[5]);
    CHECK(cn_from_f_coefficient(6, r(6), k10_coefficient(b, r(3))) == c6.c[6]);
    CHECK(c6.c[6] == PiLaurent(r(681505, 729), -12));

    const auto c8 = series::asymptotic_nonoscillatory(ode::circular_bulk_operator(8), 6);
    CHECK(cn_from_f_coefficient(5, r(8), k8_coefficient(r(4))) == c8.c[5]);
    CHECK(cn_from_f_coefficient(6, r(8), k10_coefficient(b, r(4))) ==
          PiLaurent(Rational::parse("19405708245/16777216"), -12));

    const auto small = small_k_from_cn(c6, r(6));
    for (int n = 1; n <= 6; ++n) CHECK(cn_from_f_coefficient(n, r(6), small.f_coefficient(2 * n - 2)) == c6.c[n]);
    CHECK(small.f_coefficient(8) == k8_coefficient(r(3)));
}

TEST_CASE("closed-form structure functions") {
    const double pi = std::numbers::pi;
    CHECK(closed_form_S(2, 1.0) == doctest::Approx(1.0 / (2 * pi)));
    CHECK(closed_form_S(2, -1.0) == doctest::Approx(1.0 / (2 * pi)));
    CHECK(closed_form_S(2, 7.0) == doctest::Approx(1.0));
    CHECK(closed_form_S(4, 1.0) == doctest::Approx(1 / (4 * pi) - std::log(1 - 1 / (2 * pi)) / (8 * pi)));
    CHECK(closed_form_S(4, 13.0) == doctest::Approx(1.0));
}

TEST_CASE("zeros lie on the unit circle and interlace") {
    const auto inner = zeros_on_unit_circle(k8_factor());
    const auto outer = zeros_on_unit_circle(solve_k10().b.coefficients());
    CHECK(inner.roots.size() == 6);
    CHECK(outer.roots.size() == 8);
    CHECK(inner.max_deviation < 1e-10);
    CHECK(outer.max_deviation < 1e-10);
    CHECK(interlaced(inner, outer));
    CHECK_FALSE(interlaced(outer, inner));

    // cos = 1/2, 0, -1/2 at angles pi/3, pi/2, 2 pi/3
    const auto a = zeros_on_unit_circle(from_cosines({r(0)}));
    const auto b = zeros_on_unit_circle(from_cosines({r(1, 2), r(-1, 2)}));
    CHECK(interlaced(a, b));
    CHECK_FALSE(interlaced(b, a));
    const auto off = zeros_on_unit_circle({r(4), r(0), r(1)});
    CHECK(off.max_deviation == doctest::Approx(1.0));
}

TEST_CASE("exact linear algebra") {
    const auto x = solve_exact({{r(2), r(1)}, {r(1), r(3)}}, {r(1), r(2)});
    CHECK(x == std::vector<Rational>{r(1, 5), r(3, 5)});
    CHECK_THROWS_AS(solve_exact({{r(1), r(2)}, {r(2), r(4)}}, {r(1), r(2)}), std::domain_error);
}

TEST_CASE("palindromic polynomial") {
    const PalindromicPoly p({r(1), r(2), r(3), r(4), r(5)});
    CHECK(p.coefficients() == std::vector<Rational>{r(1), r(2), r(3), r(4), r(5), r(4), r(3), r(2), r(1)});
    CHECK(p.evaluate(r(1)) == r(25));
    CHECK(PalindromicPoly::from_full(p.coefficients()) == p);
    CHECK_THROWS(PalindromicPoly::from_full({r(1), r(2), r(3), r(4), r(5), r(4), r(3), r(2), r(2)}));
    CHECK_THROWS(PalindromicPoly::from_full({r(1), r(2)}));
}
