#include "rmtsf/algebra/rational_fn.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rmtsf {

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    // Monomial factors common to both sides (this also absorbs Laurent powers of N).
    const Monomial nmin = num_.common_monomial();
    const Monomial dmin = den_.common_monomial();
    Monomial cancel{};
    for (std::size_t i = 0; i < kNumVars; ++i) cancel[i] = std::min(nmin[i], dmin[i]);
    num_ = num_.shift(cancel, -1);
    den_ = den_.shift(cancel, -1);

    if (!den_.is_constant()) {
        if (auto v = den_.sole_variable()) {
            // View the numerator as a polynomial in the other indeterminates with
            // coefficients in Q(i)[v]; cancel the gcd of all of them with den.
            std::map<Monomial, Poly> by_rest;
            for (const auto& [m, c] : num_.terms()) {
                Monomial rest = m;
                Monomial only{};
                exponent(only, *v) = exponent(m, *v);
                exponent(rest, *v) = 0;
                by_rest[rest] += Poly::term(c, only);
            }
            Poly g = den_;
            for (const auto& [rest, c] : by_rest) {
                g = univariate_gcd(g, c, *v);
                if (g.is_constant()) break;
            }
            if (!g.is_constant()) {
                num_ = divide_in(num_, g, *v).first;
                den_ = divide_in(den_, g, *v).first;
            }
        } else {
            // Multivariate denominator: cancel only exact quotients.
            for (Var v : kAllVars) {
                if (den_.free_of(v)) continue;
                if (!den_.coefficient_of(v, den_.degree(v)).is_constant()) continue;
                auto [q, r] = divide_in(num_, den_, v);
                if (r.is_zero()) {
                    num_ = std::move(q);
                    den_ = Poly(1);
                }
                break;
            }
        }
    }

    // Denominator primitive with positive leading coefficient.
    const GaussianRational scale = den_.leading_coefficient().inverse();
    den_ *= scale;
    num_ *= scale;
    const GaussianRational unscale(rational_content(den_).inverse());
    den_ *= unscale;
    num_ *= unscale;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn RationalFn::derivative(Var v) const {
    return RationalFn(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::string RationalFn::str() const {
    if (den_ == Poly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace rmtsf
