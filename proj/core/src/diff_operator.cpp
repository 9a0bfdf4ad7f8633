#include "rmtsf/algebra/diff_operator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rmtsf {

DiffOperator::DiffOperator(Var v, std::vector<Poly> coeffs) : var_(v), coeffs_(std::move(coeffs)) { trim(); }

void DiffOperator::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DiffOperator DiffOperator::identity(Var v) { return DiffOperator(v, {Poly(1)}); }

DiffOperator DiffOperator::derivative(Var v, int k) {
    if (k < 0) throw std::invalid_argument("DiffOperator::derivative: negative order");
    std::vector<Poly> c(static_cast<std::size_t>(k) + 1);
    c.back() = Poly(1);
    return DiffOperator(v, std::move(c));
}

DiffOperator DiffOperator::multiplication(Var v, Poly p) { return DiffOperator(v, {std::move(p)}); }

const Poly& DiffOperator::coefficient(int j) const {
    static const Poly zero;
    if (j < 0 || j > order()) return zero;
    return coeffs_[static_cast<std::size_t>(j)];
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    if (o.var_ != var_ && !o.is_zero() && !is_zero()) {
        throw std::invalid_argument("DiffOperator: mismatched variables");
    }
    if (is_zero()) var_ = o.var_;
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    trim();
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) { return *this += -o; }

DiffOperator DiffOperator::times(const Poly& p) const {
    DiffOperator r = *this;
    for (auto& c : r.coeffs_) c = p * c;
    r.trim();
    return r;
}

Poly DiffOperator::apply(const Poly& f) const {
    Poly out;
    Poly d = f;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (j > 0) d = d.derivative(var_);
        if (d.is_zero()) break;
        out += coeffs_[j] * d;
    }
    return out;
}

DiffOperator DiffOperator::map_coefficients(const std::function<Poly(const Poly&)>& f) const {
    std::vector<Poly> c;
    c.reserve(coeffs_.size());
    for (const auto& p : coeffs_) c.push_back(f(p));
    return DiffOperator(var_, std::move(c));
}

std::string DiffOperator::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = order(); j >= 0; --j) {
        const Poly& p = coeffs_[static_cast<std::size_t>(j)];
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        if (j > 0) os << "*D" << var_name(var_) << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return os.str();
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.is_zero() || b.is_zero()) return DiffOperator(a.variable());
    if (a.variable() != b.variable()) throw std::invalid_argument("compose: mismatched variables");
    const Var v = a.variable();
    // D^i (b_j D^j) = sum_k C(i,k) b_j^{(k)} D^{i-k+j}
    std::vector<Poly> out(static_cast<std::size_t>(a.order() + b.order() + 1));
    for (int j = 0; j <= b.order(); ++j) {
        Poly bj = b.coefficient(j);
        std::vector<Poly> derivs{bj};
        for (int i = 0; i <= a.order(); ++i) {
            const Poly& ai = a.coefficients()[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            while (static_cast<int>(derivs.size()) <= i) derivs.push_back(derivs.back().derivative(v));
            for (int k = 0; k <= i; ++k) {
                if (derivs[static_cast<std::size_t>(k)].is_zero()) break;
                out[static_cast<std::size_t>(i - k + j)] +=
                    ai * derivs[static_cast<std::size_t>(k)] * GaussianRational(Rational(binomial(i, k)));
            }
        }
    }
    return DiffOperator(v, std::move(out));
}

DiffOperator normalize(const DiffOperator& op) {
    if (op.is_zero()) throw std::domain_error("normalize: zero operator");
    Monomial common{};
    bool first = true;
    for (const auto& p : op.coefficients()) {
        if (p.is_zero()) continue;
        const Monomial m = p.common_monomial();
        if (first) {
            common = m;
            first = false;
        } else {
            for (std::size_t i = 0; i < kNumVars; ++i) common[i] = std::min(common[i], m[i]);
        }
    }
    const GaussianRational lead = op.coefficients().back().leading_coefficient();
    // Dividing by the leading coefficient makes it 1; the remaining rational
    // content is then removed, which keeps the leading coefficient positive.
    std::vector<Poly> c;
    c.reserve(op.coefficients().size());
    const GaussianRational inv = lead.inverse();
    for (const auto& p : op.coefficients()) c.push_back(p.shift(common, -1) * inv);
    const GaussianRational scale(rational_content(c).inverse());
    for (auto& p : c) p *= scale;
    return DiffOperator(op.variable(), std::move(c));
}

bool projectively_equal(const DiffOperator& a, const DiffOperator& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.variable() != b.variable()) return false;
    return normalize(a) == normalize(b);
}

}  // namespace rmtsf
