#include "rmtsf/algebra/rational_fn.hpp"
#include "rmtsf/ode/references.hpp"
#include "rmtsf/ode/selberg.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using namespace rmtsf;
using namespace rmtsf::ode;

namespace {

const Poly Z = Poly::var(Var::Z);

DiffOperator from_strings(Var v, const std::vector<std::string>& c) {
    std::vector<Poly> p;
    for (const auto& s : c) p.push_back(parse_poly(s));
    return DiffOperator(v, std::move(p));
}

using RatOp = std::vector<RationalFn>;

RatOp chain_op(const OperatorChain& ch, int p) {
    RatOp r;
    for (int j = 0; j <= ch.scaled[static_cast<std::size_t>(p)].order(); ++j) r.push_back(ch.coefficient(p, j));
    return r;
}

void add_into(RatOp& acc, const RatOp& b, const RationalFn& scale) {
    if (acc.size() < b.size()) acc.resize(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) acc[j] = acc[j] + scale * b[j];
}

// z(1 - z) d/dz composed with sum_j r_j D^j.
RatOp delta_compose(const RatOp& a) {
    const RationalFn w(Z - Z * Z);
    RatOp out(a.size() + 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
        out[j] = out[j] + w * a[j].derivative(Var::Z);
        out[j + 1] = out[j + 1] + w * a[j];
    }
    return out;
}

// Row p of z(1-z) K' = T K applied to the chain K_q = L_q[K_0].
RatOp row_residual(const TridiagonalSystem& t, const OperatorChain& ch, int p) {
    RatOp r = delta_compose(chain_op(ch, p));
    for (int c = std::max(0, p - 1); c <= std::min(t.dimension() - 1, p + 1); ++c) {
        if (c >= ch.length()) continue;
        add_into(r, chain_op(ch, c), -RationalFn(t.entry(p, c)));
    }
    return r;
}

// The n = 1 system with symbolic-free parameters used as a small worked case.
SystemParams toy() {
    SystemParams s;
    s.n = 1;
    s.lambda1 = Poly(Rational(1, 2));
    s.lambda2 = Poly(Rational(3, 2));
    s.kappa = Rational(1);
    s.alpha = Poly(2);
    s.prefactor_exponent = Poly(1);
    return s;
}

}  // namespace

TEST_CASE("chain operators satisfy every row of the first-order system") {
    for (int beta : {2, 4}) {
        const auto rc = build_system(specialize_circular(beta));
        const auto t = tridiagonal_system(rc);
        const auto ch = operator_chain(rc);
        REQUIRE(ch.length() == beta + 1);
        for (int p = 0; p < rc.n; ++p) {
            for (const auto& c : row_residual(t, ch, p)) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("the last row is the eliminated operator") {
    for (const SystemParams& prm : {toy(), specialize_circular(2), specialize_circular(4)}) {
        const auto rc = build_system(prm);
        const RatOp last = row_residual(tridiagonal_system(rc), operator_chain(rc), rc.n);
        const DiffOperator e = eliminate(prm);
        REQUIRE(static_cast<int>(last.size()) == e.order() + 1);
        const RationalFn& top = last.back();
        // last_j / top == e_j / e_top, cross-multiplied.
        for (int j = 0; j <= e.order(); ++j) {
            const RationalFn& lj = last[static_cast<std::size_t>(j)];
            CHECK(lj.num() * e.coefficients().back() * top.den() == e.coefficient(j) * top.num() * lj.den());
        }
    }
}

TEST_CASE("toy system reduces to a second-order operator") {
    const DiffOperator e = eliminate(toy());
    CHECK(e.order() == 2);
    CHECK(e == normalize(e));
    CHECK(e.coefficient(2).degree(Var::Z) >= 2);
}

TEST_CASE("tridiagonal structure") {
    const auto t = tridiagonal_system(build_system(specialize_circular(4)));
    CHECK(t.dimension() == 5);
    CHECK(t.entry(0, 2).is_zero());
    CHECK(t.entry(4, 0).is_zero());
    CHECK(t.entry(1, 0) == t.sub[0]);
    CHECK(t.entry(0, 1) == t.super[0]);
    CHECK(delta_z().apply(Z.pow(2)) == Poly(2) * Z.pow(2) - Poly(2) * Z.pow(3));
}

TEST_CASE("degenerate and invalid parameters") {
    CHECK_THROWS_AS(specialize_circular(3), std::invalid_argument);
    CHECK_THROWS_AS(specialize_circular(0), std::invalid_argument);
    CHECK_THROWS_AS(specialize_circular(-2), std::invalid_argument);
    SystemParams bad = toy();
    bad.n = 0;
    CHECK_THROWS_AS(build_system(bad), std::invalid_argument);
    // E_0 = lambda1 + lambda2 + 1 + alpha + 1 vanishes here.
    SystemParams deg = toy();
    deg.lambda1 = Poly(0);
    deg.lambda2 = Poly(0);
    deg.alpha = Poly(-2);
    CHECK_THROWS_AS(operator_chain(build_system(deg)), std::domain_error);
    CHECK_THROWS_AS(bulk_limit(DiffOperator(Var::Z)), std::invalid_argument);
    CHECK_THROWS_AS(bulk_limit(DiffOperator::derivative(Var::X)), std::invalid_argument);
}

TEST_CASE("bulk operators for beta = 2 and 4") {
    CHECK(circular_bulk_operator(2) == normalize(from_strings(Var::X, {"-4", "4*pi^2*X^3 - 2*X", "4*X^2", "X^3"})));
    CHECK(circular_bulk_operator(4) ==
          normalize(from_strings(Var::X, {"16 - 32*pi^2*X^2", "64*pi^4*X^5 - 48*pi^2*X^3 - 16*X",
                                          "64*pi^2*X^4 - 40*X^2", "20*pi^2*X^5 + 12*X^3", "10*X^4", "X^5"})));
}

TEST_CASE("bulk operator for beta = 6") {
    const DiffOperator expected = from_strings(
        Var::X, {"-1008 + 6336*pi^2*X^2 - 6912*pi^4*X^4", "2808*X + 144*pi^2*X^3 - 17280*pi^4*X^5 + 20736*pi^6*X^7",
                 "2688*X^2 - 18144*pi^2*X^4 + 20736*pi^4*X^6", "-3924*X^3 + 4080*pi^2*X^5 + 7056*pi^4*X^7",
                 "-696*X^4 + 4704*pi^2*X^6", "700*X^5 + 504*pi^2*X^7", "168*X^6", "9*X^7"});
    const DiffOperator op = circular_bulk_operator(6);
    CHECK(op == normalize(expected));
    // The order-4 coefficient is the one that differs from the commonly quoted -692.
    CHECK(op.coefficient(4).coefficient(Monomial{4, 0, 0, 0, 0}) == GaussianRational(-696));
}

TEST_CASE("bulk operator for beta = 8, displayed terms") {
    const DiffOperator op = circular_bulk_operator(8);
    REQUIRE(op.order() == 9);
    const std::vector<std::pair<int, Poly>> shown = {
        {9, parse_poly("16*X^9")},
        {8, parse_poly("480*X^8")},
        {7, parse_poly("4056*X^7 + 1920*pi^2*X^9")},
        {0, parse_poly("20000 - 259584*pi^2*X^2 + 688128*pi^4*X^4 - 589824*pi^6*X^6")},
    };
    const Poly& top = op.coefficient(9);
    for (const auto& [j, p] : shown) CHECK(op.coefficient(j) * shown.front().second == p * top);
}

TEST_CASE("bulk operators have the expected parity and truncation stability") {
    for (int beta : {2, 4, 6}) {
        const DiffOperator op = circular_bulk_operator(beta);
        CHECK(has_bulk_parity(op));
        CHECK(op.order() == beta + 1);
        BulkLimitOptions opts;
        opts.truncation = 40;
        opts.stability_check = false;
        CHECK(bulk_limit(eliminate(specialize_circular(beta)), opts) == op);
    }
    CHECK_FALSE(has_bulk_parity(from_strings(Var::X, {"X", "1"})));
}

TEST_CASE("Fourier transfer of the beta = 4 operator") {
    const DiffOperator f = fourier_side(circular_bulk_operator(4));
    const DiffOperator expected = from_strings(
        Var::K, {"0", "0", "-28*k^2 + 320*pi^2", "-52*k^3 + 640*k*pi^2", "-320*pi^4 + 236*k^2*pi^2 - 15*k^4",
                 "-64*k*pi^4 + 20*k^3*pi^2 - k^5"});
    CHECK(f == normalize(expected));
    CHECK(f.coefficient(0).is_zero());
    CHECK(f.coefficient(1).is_zero());
    // X D -> -(1 + k d/dk): transfer of the Euler operator.
    CHECK(fourier_side(from_strings(Var::X, {"0", "X"})) == normalize(from_strings(Var::K, {"1", "k"})));
}

TEST_CASE("stored reference operators") {
    for (int beta : {2, 4, 8}) {
        const auto chk = check_against_reference(circular_bulk_operator(beta), *find_reference(beta, false));
        CHECK(chk.match);
        CHECK(chk.matches_recorded);
    }
    const auto ref6 = find_reference(6, false);
    REQUIRE(ref6);
    REQUIRE(ref6->errata.size() == 1);
    CHECK(ref6->errata[0].derivative == 4);
    const auto chk6 = check_against_reference(circular_bulk_operator(6), *ref6);
    CHECK(chk6.match);
    CHECK_FALSE(chk6.matches_recorded);
    CHECK(check_against_reference(fourier_side(circular_bulk_operator(4)), *find_reference(4, true)).match);
    CHECK_FALSE(check_against_reference(circular_bulk_operator(2), *find_reference(4, false)).match);
    CHECK_FALSE(find_reference(10, false).has_value());
}
