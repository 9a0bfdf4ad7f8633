#include "rmtsf/ode/selberg.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

namespace rmtsf::ode {

namespace {

Poly z() { return Poly::var(Var::Z); }
Poly N() { return Poly::var(Var::N); }

bool coefficients_real(const DiffOperator& op) {
    return std::all_of(op.coefficients().begin(), op.coefficients().end(), [](const Poly& p) { return p.is_real(); });
}

// Signed Stirling numbers of the first kind s(j, i), 0 <= i <= j <= n.
std::vector<std::vector<Rational>> stirling1(int n) {
    std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    s[0][0] = 1;
    for (int j = 0; j < n; ++j) {
        for (int i = 1; i <= j + 1; ++i) {
            s[j + 1][i] = s[j][i - 1] - Rational(j) * s[j][i];
        }
    }
    return s;
}

struct LimitTerm {
    GaussianRational c;  // coefficient times s(j, i)
    int m;               // power of z
    int e;               // power of N
    int i;               // order in d/dX
};

DiffOperator bulk_limit_at(const std::vector<LimitTerm>& terms, int order, int truncation) {
    int p_max = INT_MIN;
    int p_min = INT_MAX;
    for (const auto& t : terms) {
        const int top = t.e - order + t.i;
        p_max = std::max(p_max, top);
        p_min = std::min(p_min, top - (t.m == 0 ? 0 : truncation));
    }
    for (int P = p_max; P >= p_min; --P) {
        std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1);
        for (const auto& t : terms) {
            const int s = t.e - order + t.i - P;
            if (s < 0 || s > truncation || (t.m == 0 && s > 0)) continue;
            const int k = s + order - t.i;  // power of 2 pi i
            Rational r = Rational(mpz_class(t.m)).pow(s) * Rational(mpz_class(1), factorial(s)) *
                         Rational(mpz_class(2)).pow(k);
            Monomial mono{};
            exponent(mono, Var::X) = s;
            exponent(mono, Var::Pi) = k;
            coeffs[static_cast<std::size_t>(t.i)] += Poly::term(t.c * GaussianRational(r) * GaussianRational::i_power(k), mono);
        }
        DiffOperator op(Var::X, std::move(coeffs));
        if (!op.is_zero()) return op;
    }
    throw std::domain_error("bulk_limit: operator vanishes at every order within the truncation");
}

}  // namespace

Poly RecurrenceCoeffs::closing_factor(int p) const { return Poly(n - p) * E.at(static_cast<std::size_t>(p)); }

Poly TridiagonalSystem::entry(int row, int col) const {
    if (row == col) return diagonal.at(static_cast<std::size_t>(row));
    if (col == row + 1) return super.at(static_cast<std::size_t>(row));
    if (row == col + 1) return sub.at(static_cast<std::size_t>(col));
    return Poly();
}

RationalFn OperatorChain::coefficient(int p, int j) const {
    return RationalFn(scaled.at(static_cast<std::size_t>(p)).coefficient(j), denominators.at(static_cast<std::size_t>(p)));
}

SystemParams specialize_circular(int beta) {
    if (beta <= 0 || beta % 2 != 0) {
        throw std::invalid_argument("specialize_circular: beta must be a positive even integer, got " + std::to_string(beta));
    }
    SystemParams p;
    p.n = beta;
    p.lambda1 = Poly(Rational(2, beta) - Rational(1));
    p.lambda2 = p.lambda1;
    p.kappa = Rational(2, beta);
    p.alpha = N() - Poly(2);
    p.prefactor_exponent = Poly(beta);
    return p;
}

RecurrenceCoeffs build_system(const SystemParams& prm) {
    if (prm.n < 1) throw std::invalid_argument("build_system: n must be positive");
    const int n = prm.n;
    const Poly kap(prm.kappa);
    const Poly a1 = prm.alpha + Poly(1);
    const Poly half_shift = (prm.alpha * Poly(n) + prm.prefactor_exponent) * GaussianRational(Rational(1, 2));
    RecurrenceCoeffs rc;
    rc.n = n;
    for (int p = 0; p <= n; ++p) {
        const Poly A = Poly(n - p) * (prm.lambda1 + prm.lambda2 + kap * Poly(2 * (n - p - 1)) + a1 * Poly(2));
        const Poly B = Poly(p - n) * (prm.lambda1 + a1 + kap * Poly(n - p - 1));
        const Poly D = Poly(p) * (kap * Poly(n - p) + a1);
        const Poly E = prm.lambda1 + prm.lambda2 + Poly(1) + kap * Poly(2 * n - p - 2) + a1;
        rc.A.push_back(A);
        rc.B.push_back(B);
        rc.D.push_back(D);
        rc.E.push_back(E);
        rc.A_tilde.push_back(A + B - half_shift);
        rc.B_tilde.push_back(B + Poly(p) + half_shift);
    }
    return rc;
}

TridiagonalSystem tridiagonal_system(const RecurrenceCoeffs& rc) {
    TridiagonalSystem t;
    for (int p = 0; p <= rc.n; ++p) {
        const auto up = static_cast<std::size_t>(p);
        t.diagonal.push_back(rc.A_tilde[up] - z() * rc.B_tilde[up]);
        if (p < rc.n) t.super.push_back(-rc.closing_factor(p));
        if (p > 0) t.sub.push_back(z() * rc.D[up]);
    }
    return t;
}

DiffOperator delta_z() { return DiffOperator(Var::Z, {Poly(), z() - z() * z()}); }

namespace {

// Right-hand side of the recurrence at p acting on the scaled chain:
// (A~_p - z B~_p) M_p - delta_z o M_p + z D_p c_{p-1} M_{p-1}.
DiffOperator chain_step(const RecurrenceCoeffs& rc, const std::vector<DiffOperator>& M, int p) {
    const auto up = static_cast<std::size_t>(p);
    DiffOperator next = M[up].times(rc.A_tilde[up] - z() * rc.B_tilde[up]) - compose(delta_z(), M[up]);
    if (p > 0) next += M[up - 1].times(z() * rc.D[up] * rc.closing_factor(p - 1));
    return next;
}

}  // namespace

OperatorChain operator_chain(const RecurrenceCoeffs& rc) {
    OperatorChain chain;
    chain.scaled.push_back(DiffOperator::identity(Var::Z));
    chain.denominators.push_back(Poly(1));
    for (int p = 0; p < rc.n; ++p) {
        const Poly c = rc.closing_factor(p);
        if (c.is_zero()) throw std::domain_error("degenerate elimination: (n-p) E_p vanishes at p = " + std::to_string(p));
        chain.scaled.push_back(chain_step(rc, chain.scaled, p));
        chain.denominators.push_back(chain.denominators.back() * c);
    }
    return chain;
}

DiffOperator eliminate(const SystemParams& params) {
    const RecurrenceCoeffs rc = build_system(params);
    const OperatorChain chain = operator_chain(rc);
    return normalize(chain_step(rc, chain.scaled, rc.n));
}

DiffOperator bulk_limit(const DiffOperator& op_z, const BulkLimitOptions& opts) {
    if (op_z.is_zero()) throw std::invalid_argument("bulk_limit: zero operator");
    if (op_z.variable() != Var::Z) throw std::invalid_argument("bulk_limit: operator must act in z");
    const int d = op_z.order();
    const auto st = stirling1(d);

    // u^d z^d op_z with z^j D_z^j = sum_i s(j,i) theta^i and theta = u^{-1} D_X.
    std::vector<LimitTerm> terms;
    int max_zdeg = 0;
    for (int j = 0; j <= d; ++j) {
        for (const auto& [mono, c] : op_z.coefficient(j).terms()) {
            for (Var v : {Var::X, Var::K, Var::Pi}) {
                if (exponent(mono, v) != 0) throw std::invalid_argument("bulk_limit: coefficients must involve only z and N");
            }
            max_zdeg = std::max(max_zdeg, exponent(mono, Var::Z));
            for (int i = (j == 0 ? 0 : 1); i <= j; ++i) {
                const Rational& s = st[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (s.is_zero()) continue;
                terms.push_back({c * GaussianRational(s), exponent(mono, Var::Z) + d - j, exponent(mono, Var::N), i});
            }
        }
    }
    const int M = opts.truncation > 0 ? opts.truncation : max_zdeg + d + 2;
    DiffOperator raw = bulk_limit_at(terms, d, M);
    if (raw.order() < d) {
        throw std::domain_error("bulk_limit: order collapse (" + std::to_string(d) + " -> " + std::to_string(raw.order()) + ")");
    }
    DiffOperator out = normalize(raw);
    if (!coefficients_real(out)) throw std::domain_error("bulk_limit: non-real limit");
    if (opts.stability_check) {
        DiffOperator wider = normalize(bulk_limit_at(terms, d, M + 2));
        if (wider != out) throw std::domain_error("bulk_limit: result changes when the truncation is raised");
    }
    return out;
}

bool has_bulk_parity(const DiffOperator& op) {
    for (int j = 0; j <= op.order(); ++j) {
        for (const auto& [mono, c] : op.coefficient(j).terms()) {
            if (((exponent(mono, Var::X) - j) % 2 + 2) % 2 != 0) return false;
            if (exponent(mono, Var::Pi) % 2 != 0) return false;
        }
    }
    return true;
}

DiffOperator fourier_side(const DiffOperator& op_x) {
    if (op_x.is_zero()) throw std::invalid_argument("fourier_side: zero operator");
    if (op_x.variable() != Var::X) throw std::invalid_argument("fourier_side: operator must act in X");
    DiffOperator out(Var::K);
    for (int j = 0; j <= op_x.order(); ++j) {
        for (const auto& [mono, c] : op_x.coefficient(j).terms()) {
            for (Var v : {Var::K, Var::Z, Var::N}) {
                if (exponent(mono, v) != 0) throw std::invalid_argument("fourier_side: coefficients must involve only X and pi");
            }
            const int m = exponent(mono, Var::X);
            const DiffOperator outer = DiffOperator::derivative(Var::K, m).times(Poly(GaussianRational::i_power(3 * m)));
            const DiffOperator inner =
                DiffOperator::multiplication(Var::K, Poly::var(Var::K, j) * GaussianRational::i_power(3 * j));
            Monomial pi_part{};
            exponent(pi_part, Var::Pi) = exponent(mono, Var::Pi);
            out += compose(outer, inner).times(Poly::term(c, pi_part));
        }
    }
    if (out.is_zero()) throw std::domain_error("fourier_side: transformed operator vanishes");
    out = normalize(out);
    if (!coefficients_real(out)) throw std::domain_error("fourier_side: non-real result");
    return out;
}

DiffOperator circular_bulk_operator(int beta) { return bulk_limit(eliminate(specialize_circular(beta))); }

}  // namespace rmtsf::ode
