#include "rmtsf/algebra/formal_series.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rmtsf {

FormalSeries::FormalSeries(SeriesKind kind, Var v, Rational exponent, std::vector<PiLaurent> coeffs, int truncation)
    : kind_(kind), var_(v), exponent_(std::move(exponent)), coeffs_(std::move(coeffs)), truncation_(truncation) {
    if (truncation_ < 0) throw std::invalid_argument("FormalSeries: negative truncation order");
    if (static_cast<int>(coeffs_.size()) > truncation_ + 1) {
        throw std::invalid_argument("FormalSeries: more coefficients than the truncation order allows");
    }
    coeffs_.resize(static_cast<std::size_t>(truncation_) + 1);
}

const PiLaurent& FormalSeries::coefficient(int m) const {
    if (m < 0 || m > truncation_) throw std::out_of_range("FormalSeries: coefficient beyond truncation order");
    return coeffs_[static_cast<std::size_t>(m)];
}

FormalSeries FormalSeries::operator-() const { return scaled(PiLaurent(-1)); }

FormalSeries FormalSeries::scaled(const PiLaurent& c) const {
    FormalSeries r = *this;
    for (auto& a : r.coeffs_) a = a * c;
    return r;
}

FormalSeries FormalSeries::truncated(int t) const {
    if (t > truncation_) throw std::invalid_argument("FormalSeries::truncated: cannot extend truncation order");
    return FormalSeries(kind_, var_, exponent_, {coeffs_.begin(), coeffs_.begin() + t + 1}, t);
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    if (a.kind_ != b.kind_ || a.var_ != b.var_) throw std::invalid_argument("FormalSeries: incompatible series");
    // The base series is the one whose leading exponent comes first in the stride direction.
    const Rational offset_q = (b.exponent_ - a.exponent_) / Rational(a.stride());
    if (!offset_q.is_integer()) throw std::invalid_argument("FormalSeries: exponents not aligned with the stride");
    const FormalSeries& base = offset_q.sign() >= 0 ? a : b;
    const FormalSeries& other = offset_q.sign() >= 0 ? b : a;
    const int offset = static_cast<int>(offset_q.abs().numerator().get_si());
    const int t = std::min(base.truncation_, other.truncation_ + offset);
    std::vector<PiLaurent> c(base.coeffs_.begin(), base.coeffs_.begin() + t + 1);
    for (int m = offset; m <= t; ++m) c[static_cast<std::size_t>(m)] += other.coeffs_[static_cast<std::size_t>(m - offset)];
    return FormalSeries(base.kind_, base.var_, base.exponent_, std::move(c), t);
}

bool FormalSeries::is_zero() const { return valuation() < 0; }

int FormalSeries::valuation() const {
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        if (!coeffs_[m].is_zero()) return static_cast<int>(m);
    }
    return -1;
}

double FormalSeries::evaluate(double v) const {
    double s = 0.0;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        s += coeffs_[m].to_double() * std::pow(v, stride() * static_cast<double>(m));
    }
    return s * std::pow(v, exponent_.to_double());
}

std::string FormalSeries::str() const {
    std::ostringstream os;
    os << var_name(var_) << "^(" << exponent_.str() << ") * [";
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        if (m) os << ", ";
        os << coeffs_[m].str();
    }
    os << "] + O(" << var_name(var_) << "^("
       << (exponent_ + Rational(stride() * (truncation_ + 1))).str() << "))";
    return os.str();
}

Rational falling_factorial(const Rational& x, int j) {
    Rational r(1);
    for (int i = 0; i < j; ++i) r *= x - Rational(i);
    return r;
}

namespace {

struct OpTerm {
    Rational c;
    int pi_power;
    int shift;  // a - j
    int j;
};

std::vector<OpTerm> op_terms(const DiffOperator& op, Var v) {
    std::vector<OpTerm> out;
    for (int j = 0; j <= op.order(); ++j) {
        for (const auto& [m, c] : op.coefficient(j).terms()) {
            for (Var w : kAllVars) {
                if (w != v && w != Var::Pi && exponent(m, w) != 0) {
                    throw std::domain_error("apply_series: operator coefficient involves " + std::string(var_name(w)));
                }
            }
            if (!c.is_real()) throw std::domain_error("apply_series: operator coefficients must be real");
            out.push_back({c.re, exponent(m, Var::Pi), exponent(m, v) - j, j});
        }
    }
    return out;
}

}  // namespace

FormalSeries apply_series(const DiffOperator& op, const FormalSeries& s, int required_truncation) {
    if (op.is_zero()) throw std::invalid_argument("apply_series: zero operator");
    if (op.variable() != s.variable()) throw std::invalid_argument("apply_series: variable mismatch");
    if (s.truncation() < required_truncation) {
        throw std::domain_error("apply_series: series truncated below the required order");
    }
    const auto terms = op_terms(op, s.variable());
    const int T = s.truncation();
    std::vector<PiLaurent> out(static_cast<std::size_t>(T) + 1);

    if (s.kind() == SeriesKind::FrobeniusAtZero) {
        int e_min = INT_MAX;
        for (const auto& t : terms) e_min = std::min(e_min, t.shift);
        for (const auto& t : terms) {
            const int d = t.shift - e_min;
            for (int m = 0; m + d <= T; ++m) {
                const PiLaurent& a = s.coefficient(m);
                if (a.is_zero()) continue;
                const Rational f = t.c * falling_factorial(s.exponent() + Rational(m), t.j);
                out[static_cast<std::size_t>(m + d)] += a.scaled(f).times_pi(t.pi_power);
            }
        }
        return FormalSeries(s.kind(), s.variable(), s.exponent() + Rational(e_min), std::move(out), T);
    }

    int e_max = INT_MIN;
    for (const auto& t : terms) e_max = std::max(e_max, t.shift);
    for (const auto& t : terms) {
        const int gap = e_max - t.shift;
        if (gap % 2 != 0) throw std::domain_error("apply_series: operator mixes parities on an even asymptotic series");
        const int d = gap / 2;
        for (int n = 0; n + d <= T; ++n) {
            const PiLaurent& c = s.coefficient(n);
            if (c.is_zero()) continue;
            const Rational f = t.c * falling_factorial(s.exponent() - Rational(2 * n), t.j);
            out[static_cast<std::size_t>(n + d)] += c.scaled(f).times_pi(t.pi_power);
        }
    }
    return FormalSeries(s.kind(), s.variable(), s.exponent() + Rational(e_max), std::move(out), T);
}

}  // namespace rmtsf
