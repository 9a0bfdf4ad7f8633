#include "rmtsf/series/analysis.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

namespace rmtsf::series {

namespace {

struct Term {
    Rational c;
    int pi_power;
    int x_power;
    int j;
    int shift() const { return x_power - j; }
};

std::vector<Term> real_terms(const DiffOperator& op) {
    if (op.is_zero()) throw std::invalid_argument("series: zero operator");
    if (op.variable() != Var::X) throw std::invalid_argument("series: operator must act in X");
    std::vector<Term> out;
    for (int j = 0; j <= op.order(); ++j) {
        for (const auto& [m, c] : op.coefficient(j).terms()) {
            for (Var v : {Var::K, Var::Z, Var::N}) {
                if (exponent(m, v) != 0) throw std::invalid_argument("series: coefficients must involve only X and pi");
            }
            if (!c.is_real()) throw std::invalid_argument("series: coefficients must be real");
            out.push_back({c.re, exponent(m, Var::Pi), exponent(m, Var::X), j});
        }
    }
    return out;
}

// Polynomials in one variable as coefficient vectors, lowest degree first.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly falling_factorial_poly(int j) {
    UPoly p{Rational(1)};
    for (int i = 0; i < j; ++i) {
        UPoly next(p.size() + 1);
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += p[k];
            next[k] -= Rational(i) * p[k];
        }
        p = std::move(next);
    }
    return p;
}

Rational eval(const UPoly& p, const Rational& x) {
    Rational r;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

// Divides by (x - r); the remainder must be zero.
UPoly deflate(const UPoly& p, const Rational& r) {
    UPoly q(p.size() - 1);
    Rational carry;
    for (std::size_t k = p.size() - 1; k > 0; --k) {
        carry = carry * r + p[k];
        q[k - 1] = carry;
    }
    return q;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Pi-Laurent value of sum over terms of c pi^b ff(s, j).
PiLaurent leading_symbol(const std::vector<Term>& terms, int shift, const Rational& s) {
    PiLaurent v;
    for (const auto& t : terms) {
        if (t.shift() == shift) v += PiLaurent(t.c * falling_factorial(s, t.j), t.pi_power);
    }
    return v;
}

}  // namespace

int IndicialData::root_count() const {
    int n = 0;
    for (const auto& [r, m] : roots) n += m;
    return n;
}

std::vector<Rational> IndicialData::root_list() const {
    std::vector<Rational> out;
    for (const auto& [r, m] : roots) out.insert(out.end(), static_cast<std::size_t>(m), r);
    return out;
}

IndicialData indicial_roots(const DiffOperator& op) {
    const auto terms = real_terms(op);
    int e_min = INT_MAX;
    for (const auto& t : terms) e_min = std::min(e_min, t.shift());
    UPoly poly;
    for (const auto& t : terms) {
        if (t.shift() != e_min) continue;
        if (t.pi_power != 0) throw std::domain_error("indicial_roots: indicial polynomial involves pi");
        const UPoly ff = falling_factorial_poly(t.j);
        if (poly.size() < ff.size()) poly.resize(ff.size());
        for (std::size_t k = 0; k < ff.size(); ++k) poly[k] += t.c * ff[k];
    }
    trim(poly);
    if (static_cast<int>(poly.size()) - 1 != op.order()) {
        throw std::domain_error("indicial_roots: X = 0 is an irregular singular point");
    }
    IndicialData data;
    data.polynomial = poly;

    UPoly rest = poly;
    while (rest.size() > 1 && rest.front().is_zero()) {
        rest.erase(rest.begin());
        ++data.roots[Rational(0)];
    }
    // Rational root theorem on the integer-cleared polynomial.
    mpz_class den = 1;
    for (const auto& c : rest) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    const mpz_class lead = (rest.back() * Rational(den)).numerator();
    const mpz_class constant = (rest.front() * Rational(den)).numerator();
    std::vector<Rational> candidates;
    for (const auto& p : divisors(constant)) {
        for (const auto& q : divisors(lead)) {
            candidates.emplace_back(p, q);
            candidates.emplace_back(-p, q);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        while (rest.size() > 1 && eval(rest, r).is_zero()) {
            rest = deflate(rest, r);
            ++data.roots[r];
        }
    }
    data.unresolved = rest;
    return data;
}

FormalSeries frobenius(const DiffOperator& op, const Rational& rho, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("frobenius: need at least one term");
    const auto terms = real_terms(op);
    int e_min = INT_MAX;
    for (const auto& t : terms) e_min = std::min(e_min, t.shift());
    const PiLaurent i0 = leading_symbol(terms, e_min, rho);
    if (!i0.is_zero()) throw std::domain_error("frobenius: " + rho.str() + " is not an indicial root");

    std::vector<PiLaurent> a{PiLaurent(1)};
    for (int q = 1; q < n_terms; ++q) {
        PiLaurent rhs;
        for (const auto& t : terms) {
            const int d = t.shift() - e_min;
            if (d == 0 || d > q) continue;
            const PiLaurent& prev = a[static_cast<std::size_t>(q - d)];
            if (prev.is_zero()) continue;
            rhs -= prev.scaled(t.c * falling_factorial(rho + Rational(q - d), t.j)).times_pi(t.pi_power);
        }
        const PiLaurent pivot = leading_symbol(terms, e_min, rho + Rational(q));
        if (pivot.is_zero()) {
            throw std::domain_error("frobenius: resonance at shift " + std::to_string(q) + " (rho + " +
                                    std::to_string(q) + " is also an indicial root)");
        }
        a.push_back(rhs.divided_by(pivot));
    }
    return FormalSeries(SeriesKind::FrobeniusAtZero, Var::X, rho, std::move(a), n_terms - 1);
}

FormalSeries AsymptoticExpansion::series() const {
    return FormalSeries(SeriesKind::AsymptoticAtInfinity, Var::X, Rational(0), c, static_cast<int>(c.size()) - 1);
}

AsymptoticExpansion asymptotic_nonoscillatory(const DiffOperator& op, int n_max) {
    if (n_max < 0) throw std::invalid_argument("asymptotic_nonoscillatory: negative n_max");
    const auto terms = real_terms(op);
    int e_max = INT_MIN;
    for (const auto& t : terms) e_max = std::max(e_max, t.shift());
    if (!leading_symbol(terms, e_max, Rational(0)).is_zero()) {
        throw std::domain_error("asymptotic_nonoscillatory: constants do not solve the operator at leading order");
    }
    for (const auto& t : terms) {
        if ((e_max - t.shift()) % 2 != 0) {
            throw std::domain_error("asymptotic_nonoscillatory: operator is not even under X -> -X");
        }
    }
    AsymptoticExpansion out;
    out.c.push_back(PiLaurent(1));
    for (int q = 1; q <= n_max; ++q) {
        PiLaurent rhs;
        for (const auto& t : terms) {
            const int d = (e_max - t.shift()) / 2;
            if (d == 0 || d > q) continue;
            const PiLaurent& prev = out.c[static_cast<std::size_t>(q - d)];
            if (prev.is_zero()) continue;
            rhs -= prev.scaled(t.c * falling_factorial(Rational(-2 * (q - d)), t.j)).times_pi(t.pi_power);
        }
        const PiLaurent pivot = leading_symbol(terms, e_max, Rational(-2 * q));
        if (pivot.is_zero()) throw std::domain_error("asymptotic_nonoscillatory: vanishing pivot at n = " + std::to_string(q));
        if (!pivot.is_monomial()) {
            throw std::domain_error("asymptotic_nonoscillatory: pivot at n = " + std::to_string(q) + " is not a single power of pi");
        }
        out.c.push_back(rhs.divided_by(pivot));
    }
    return out;
}

std::vector<OscillatoryExponent> oscillatory_exponents(const DiffOperator& op) {
    const auto terms = real_terms(op);
    int a_max = INT_MIN;
    int pi_max = 0;
    for (const auto& t : terms) {
        a_max = std::max(a_max, t.x_power);
        pi_max = std::max(pi_max, t.pi_power);
    }
    // With w = 2 pi p, collect F0(w) = sum c pi^b (i w)^j over the top X-power,
    // G(w) = sum c pi^b j (i w)^{j-1} over the same terms and F1(w) over the next
    // X-power, all as polynomials in pi. Solutions need F0 = 0 and a G = F1.
    auto symbol = [&](int x_power, int p, bool derivative) {
        Poly f;
        for (const auto& t : terms) {
            if (t.x_power != x_power) continue;
            if (derivative) {
                if (t.j == 0) continue;
                const GaussianRational c = GaussianRational(t.c * Rational(t.j) * Rational(2 * p).pow(t.j - 1)) *
                                           GaussianRational::i_power(t.j - 1);
                f += Poly::term(c, Monomial{0, 0, 0, t.pi_power + t.j - 1, 0});
            } else {
                const GaussianRational c = GaussianRational(t.c * Rational(2 * p).pow(t.j)) * GaussianRational::i_power(t.j);
                f += Poly::term(c, Monomial{0, 0, 0, t.pi_power + t.j, 0});
            }
        }
        return f;
    };
    std::vector<OscillatoryExponent> out;
    for (int p = 1; p <= pi_max / 2 + 1; ++p) {
        if (!symbol(a_max, p, false).is_zero()) continue;
        const Poly g = symbol(a_max, p, true);
        const Poly f1 = symbol(a_max - 1, p, false);
        if (g.is_zero()) continue;  // repeated frequency: decay not fixed at this order
        const GaussianRational lam = f1.is_zero() ? GaussianRational() : f1.leading_coefficient() / g.leading_coefficient();
        if (f1 != g * lam) continue;
        if (!lam.is_real()) continue;
        out.push_back({p, lam.re});
    }
    return out;
}

}  // namespace rmtsf::series
