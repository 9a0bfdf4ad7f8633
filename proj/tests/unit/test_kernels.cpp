#include "oracles.hpp"

#include "rmtsf/gue/kernels.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include <cmath>
#include <complex>

using namespace rmtsf::gue;

TEST_CASE("GUE kernel against the summed Hermite oracle") {
    for (int n : {1, 4, 25}) {
        const GueKernel k(n);
        for (double x : {-2.3, 0.0, 0.41, 3.9}) {
            for (double y : {-1.0, 0.4100001, 2.2}) {
                const double ref = oracle::gue_kernel(n, x, y);
                CHECK(k(x, y) == doctest::Approx(ref).epsilon(1e-10).scale(1e-12));
                CHECK(k.summed(x, y) == doctest::Approx(ref).epsilon(1e-10).scale(1e-12));
                if (std::abs(x - y) > 0.1) {
                    CHECK(k.christoffel_darboux(x, y) == doctest::Approx(ref).epsilon(1e-9).scale(1e-12));
                }
            }
            CHECK(k.diagonal(x) == doctest::Approx(oracle::gue_kernel(n, x, x)).epsilon(1e-10).scale(1e-12));
            CHECK(k.scaled_psi(n - 1, x) == doctest::Approx(oracle::hermite_function(n - 1, x)).scale(1e-12));
            CHECK(k.scaled_psi(n, x) ==
                  doctest::Approx(std::sqrt(n / 2.0) * oracle::hermite_function(n, x)).scale(1e-12));
        }
    }
}

TEST_CASE("GUE kernel derivative and normalization") {
    const GueKernel k(9);
    const double h = 1e-4;
    for (double x : {-1.5, 0.2, 2.7}) {
        const double fd = (oracle::gue_kernel(9, x + h, 0.6) - oracle::gue_kernel(9, x - h, 0.6)) / (2 * h);
        CHECK(k.d_first(x, 0.6) == doctest::Approx(fd).epsilon(1e-6).scale(1e-8));
    }
    const auto rule = oracle::gauss_legendre(-12, 12, 0.5);
    double trace = 0.0;
    double reproduced = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        trace += rule.w[i] * k.diagonal(rule.x[i]);
        reproduced += rule.w[i] * k(0.3, rule.x[i]) * k(rule.x[i], -1.1);
    }
    CHECK(trace == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(reproduced == doctest::Approx(k(0.3, -1.1)).epsilon(1e-11));
}

TEST_CASE("LUE kernel") {
    const LueKernel k(12);
    CHECK(k.size() == 12);
    CHECK(k.parameter() == 0.0);
    for (double x : {0.05, 1.3, 7.7, 30.0}) {
        for (double y : {0.2, 1.3000001, 12.0}) {
            const double ref = oracle::lue_kernel(12, x, y);
            CHECK(k(x, y) == doctest::Approx(ref).epsilon(1e-10).scale(1e-12));
            CHECK(k.summed(x, y) == doctest::Approx(ref).epsilon(1e-10).scale(1e-12));
            const auto z = k(std::complex<double>(x), std::complex<double>(y));
            CHECK(std::abs(z - ref) < 1e-10 * (1 + std::abs(ref)));
        }
    }
    CHECK(k.christoffel_darboux(0.5, 4.0) == doctest::Approx(oracle::lue_kernel(12, 0.5, 4.0)).epsilon(1e-10));
    // complex symmetry K(conj z, conj w) = conj K(z, w)
    const std::complex<double> z(1.2, 0.8), w(3.0, -0.4);
    CHECK(std::abs(k(std::conj(z), std::conj(w)) - std::conj(k(z, w))) < 1e-11);

    const LueKernel k1(6, 1.0);
    const auto rule = oracle::gauss_legendre(0, 80, 0.5);
    double trace = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) trace += rule.w[i] * k1.diagonal(rule.x[i]);
    CHECK(trace == doctest::Approx(6.0).epsilon(1e-11));
}

TEST_CASE("hard-edge limit") {
    const HardEdgeKernel hard;
    for (double x : {0.3, 2.0, 15.0}) {
        const double s = std::sqrt(x);
        const double j0 = boost::math::cyl_bessel_j(0, s);
        const double j1 = boost::math::cyl_bessel_j(1, s);
        CHECK(hard.diagonal(x) == doctest::Approx((j0 * j0 + j1 * j1) / 4).epsilon(1e-12));
        CHECK(hard(x, x * (1 + 1e-9)) == doctest::Approx(hard.diagonal(x)).epsilon(1e-6));
    }
    double previous = 1.0;
    for (int n : {50, 200, 800}) {
        const LueKernel k(n);
        const double err = std::abs(k(1.5 / (4 * n), 6.0 / (4 * n)) / (4 * n) - hard(1.5, 6.0));
        CHECK(err < previous);
        previous = err;
    }
    CHECK(previous < 1e-3);
}

TEST_CASE("soft-edge limit") {
    const SoftEdgeKernel airy;
    for (double x : {-4.0, -0.5, 0.0, 2.5}) {
        const double ai = boost::math::airy_ai(x);
        const double aip = boost::math::airy_ai_prime(x);
        CHECK(airy.diagonal(x) == doctest::Approx(aip * aip - x * ai * ai).epsilon(1e-10));
        for (double y : {-3.0, 0.7}) {
            CHECK(airy(x, y) == doctest::Approx(oracle::airy_kernel(x, y)).epsilon(1e-9).scale(1e-12));
        }
    }
    CHECK(airy(1.0, 1.0) == doctest::Approx(airy.diagonal(1.0)));
    // GUE edge scaling: sqrt(2N) + s / (sqrt 2 N^{1/6})
    const int n = 400;
    const double scale = 1 / (std::sqrt(2.0) * std::pow(n, 1.0 / 6));
    const GueKernel k(n);
    const double edge = std::sqrt(2.0 * n);
    CHECK(k(edge - 1.0 * scale, edge + 0.5 * scale) * scale == doctest::Approx(airy(-1.0, 0.5)).epsilon(2e-2));
}
