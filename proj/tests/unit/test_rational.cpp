#include "gen.hpp"

#include "rmtsf/algebra/rational.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using rmtsf::GaussianRational;
using rmtsf::Rational;

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("17").is_integer());
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(-2, 3).sign() == -1);
}

TEST_CASE("rational parse errors") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
    CHECK(rmtsf::binomial(10, 3) == 120);
    CHECK(rmtsf::factorial(11) == 39916800);
    std::ostringstream os;
    os << Rational(-7, 3);
    CHECK(os.str() == "-7/3");
}

TEST_CASE("rational field axioms on random samples") {
    for (int i = 0; i < 200; ++i) {
        const Rational a = gen::rational(), b = gen::rational(), c = gen::nonzero_rational();
        CHECK(a + b == b + a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a / c) * c == a);
        CHECK(a - a == Rational(0));
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("gaussian rationals") {
    const GaussianRational i = GaussianRational::i_unit();
    CHECK(i * i == GaussianRational(-1));
    CHECK(GaussianRational::i_power(7) == -i);
    CHECK(GaussianRational::i_power(-1) == -i);
    const GaussianRational z(Rational(3), Rational(4));
    CHECK(z.norm() == Rational(25));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(z.conj() == GaussianRational(Rational(3), Rational(-4)));
    CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
    for (int k = 0; k < 100; ++k) {
        const GaussianRational a = gen::gaussian(), b = gen::gaussian();
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}
