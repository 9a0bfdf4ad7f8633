#include "oracles.hpp"

#include "rmtsf/gue/orthopoly.hpp"
#include "rmtsf/gue/special_functions.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

using namespace rmtsf;
using namespace rmtsf::gue;

TEST_CASE("special functions agree with Boost") {
    for (double x : {0.0, 0.3, 1.7, 5.2, 18.9}) {
        CHECK(sf::bessel_j0(x) == doctest::Approx(boost::math::cyl_bessel_j(0, x)).epsilon(1e-13));
        CHECK(sf::bessel_j1(x) == doctest::Approx(boost::math::cyl_bessel_j(1, x)).epsilon(1e-13));
        CHECK(sf::erf(x / 4) == doctest::Approx(boost::math::erf(x / 4)).epsilon(1e-14));
    }
    for (double x : {-7.5, -2.0, 0.0, 1.3, 6.0}) {
        CHECK(sf::airy_ai(x) == doctest::Approx(boost::math::airy_ai(x)).epsilon(1e-11));
        CHECK(sf::airy_ai_prime(x) == doctest::Approx(boost::math::airy_ai_prime(x)).epsilon(1e-11));
    }
    for (double x : {0.5, 3.0, 11.25}) {
        CHECK(sf::gamma(x) == doctest::Approx(boost::math::tgamma(x)).epsilon(1e-13));
        CHECK(sf::lgamma(x) == doctest::Approx(boost::math::lgamma(x)).epsilon(1e-13));
    }
}

TEST_CASE("sine integral against quadrature of sin(t)/t") {
    for (double x : {0.1, 1.0, 4.0, 12.5}) {
        const auto rule = oracle::gauss_legendre(0.0, x, 0.5);
        double s = 0.0;
        for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * std::sin(rule.x[i]) / rule.x[i];
        CHECK(sf::sine_integral(x) == doctest::Approx(s).epsilon(1e-13));
    }
    CHECK(sf::sine_integral(-2.0) == doctest::Approx(-sf::sine_integral(2.0)));
}

TEST_CASE("special functions reject bad input") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(sf::bessel_j0(nan), std::domain_error);
    CHECK_THROWS_AS(sf::gamma(-2.0), std::domain_error);
    CHECK_THROWS_AS(sf::airy_ai(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("Hermite functions") {
    for (int n : {1, 5, 40}) {
        for (double x : {-3.1, 0.0, 0.7, 6.5}) {
            const auto phi = hermite_functions(n, x);
            REQUIRE(phi.size() == static_cast<std::size_t>(n) + 1);
            for (int j : {0, n / 2, n}) {
                CHECK(phi[static_cast<std::size_t>(j)] ==
                      doctest::Approx(oracle::hermite_function(j, x)).epsilon(1e-10).scale(1e-12));
            }
        }
    }
    for (int n : {0, 3, 10}) {
        CHECK(gue_log_norm(n) ==
              doctest::Approx(0.5 * std::log(std::numbers::pi) - n * std::log(2.0) + std::lgamma(n + 1.0)));
        CHECK(hermite_exact(n, Rational(3, 7)).to_double() ==
              doctest::Approx(boost::math::hermite(static_cast<unsigned>(n), 3.0 / 7)).epsilon(1e-13));
    }
    CHECK(lue_log_norm(4, 1.0) == doctest::Approx(std::lgamma(5.0) + std::lgamma(6.0)));
}

TEST_CASE("Laguerre polynomials: exact, floating and Boost") {
    for (int n = 0; n <= 30; ++n) {
        for (int a : {0, 1, 3}) {
            for (const Rational& x : {Rational(1, 3), Rational(5, 2), Rational(-7, 4)}) {
                const double ex = laguerre_exact(n, Rational(a), x).to_double();
                const double boost_v =
                    boost::math::laguerre(static_cast<unsigned>(n), static_cast<unsigned>(a), x.to_double());
                CHECK(laguerre<double>(n, a, x.to_double()) == doctest::Approx(ex).epsilon(1e-9).scale(1e-9));
                CHECK(boost_v == doctest::Approx(ex).epsilon(1e-9).scale(1e-9));
            }
        }
    }
    // half-integer parameter: L_1^{(a)}(x) = 1 + a - x
    CHECK(laguerre_exact(1, Rational(1, 2), Rational(1, 4)) == Rational(5, 4));
    const std::complex<double> z(0.8, 0.0);
    CHECK(std::abs(laguerre<std::complex<double>>(12, 1.0, z) - laguerre<double>(12, 1.0, 0.8)) < 1e-12);
    const std::complex<double> w(1.3, -2.1);
    CHECK(std::abs(laguerre<std::complex<double>>(9, 1.0, std::conj(w)) -
                   std::conj(laguerre<std::complex<double>>(9, 1.0, w))) < 1e-10);
}

TEST_CASE("laguerre_log") {
    for (double x : {0.4, 3.3, 17.0, -5.0}) {
        const double v = boost::math::laguerre(25u, 1u, x);
        const auto [lg, sign] = laguerre_log(25, 1.0, x);
        CHECK(sign == (v < 0 ? -1 : 1));
        CHECK(lg == doctest::Approx(std::log(std::abs(v))).epsilon(1e-10));
    }
    // far beyond double range: L_n^{(1)}(-x) > 0 and grows like exp(2 sqrt(n x))
    const auto [lg, sign] = laguerre_log(4000, 1.0, -3000.0);
    CHECK(sign == 1);
    CHECK(std::isfinite(lg));
    CHECK(lg > 700.0);
    const auto [lg2, sign2] = laguerre_log(4001, 1.0, -3000.0);
    CHECK(lg2 > lg);
    CHECK(sign2 == 1);
}

TEST_CASE("terminating hypergeometric series") {
    // 2F1(-p, b; b; z) = (1 - z)^p
    CHECK(hyp2f1_terminating(5, 1.5, 1.5, 0.3) == doctest::Approx(std::pow(0.7, 5)));
    CHECK(hyp2f1_terminating_exact(5, Rational(3, 2), Rational(3, 2), Rational(3, 10)) == Rational(7, 10).pow(5));
    // 2F1(-n, n; 1/2; (1 - x)/2) = T_n(x)
    const double x = 0.37;
    CHECK(hyp2f1_terminating(7, 7.0, 0.5, (1 - x) / 2) == doctest::Approx(std::cos(7 * std::acos(x))));
    CHECK(hyp2f1_terminating(0, 2.0, 3.0, 10.0) == 1.0);
}
