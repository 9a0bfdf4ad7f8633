#include "rmtsf/algebra/pi_laurent.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rmtsf {

PiLaurent::PiLaurent(Rational q, int pi_power) {
    if (!q.is_zero()) terms_.emplace(pi_power, std::move(q));
}

PiLaurent PiLaurent::from_poly(const Poly& p) {
    PiLaurent r;
    for (const auto& [m, c] : p.terms()) {
        for (Var v : kAllVars) {
            if (v != Var::Pi && exponent(m, v) != 0) {
                throw std::domain_error("PiLaurent::from_poly: polynomial involves " + std::string(var_name(v)));
            }
        }
        if (!c.is_real()) throw std::domain_error("PiLaurent::from_poly: non-real coefficient");
        r += PiLaurent(c.re, exponent(m, Var::Pi));
    }
    return r;
}

Poly PiLaurent::to_poly() const {
    Poly p;
    for (const auto& [k, q] : terms_) {
        if (k < 0) throw std::domain_error("PiLaurent::to_poly: negative power of pi");
        p += Poly(q) * Poly::var(Var::Pi, k);
    }
    return p;
}

Rational PiLaurent::coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

PiLaurent PiLaurent::operator-() const {
    PiLaurent r = *this;
    for (auto& [k, q] : r.terms_) q = -q;
    return r;
}

PiLaurent& PiLaurent::operator+=(const PiLaurent& o) {
    for (const auto& [k, q] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, q);
        if (inserted) continue;
        it->second += q;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

PiLaurent& PiLaurent::operator-=(const PiLaurent& o) { return *this += -o; }

PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
    PiLaurent r;
    for (const auto& [ka, qa] : a.terms_) {
        for (const auto& [kb, qb] : b.terms_) r += PiLaurent(qa * qb, ka + kb);
    }
    return r;
}

PiLaurent PiLaurent::scaled(const Rational& r) const { return *this * PiLaurent(r); }

PiLaurent PiLaurent::times_pi(int k) const {
    PiLaurent r;
    for (const auto& [e, q] : terms_) r.terms_.emplace(e + k, q);
    return r;
}

PiLaurent PiLaurent::divided_by(const PiLaurent& monomial) const {
    if (monomial.terms_.size() != 1) throw std::domain_error("PiLaurent::divided_by: divisor must be a single term");
    const auto& [k, q] = *monomial.terms_.begin();
    return scaled(q.inverse()).times_pi(-k);
}

double PiLaurent::to_double() const {
    double s = 0.0;
    for (const auto& [k, q] : terms_) s += q.to_double() * std::pow(std::numbers::pi, k);
    return s;
}

std::string PiLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, q] = *it;
        if (!first) os << (q.sign() < 0 ? " - " : " + ");
        else if (q.sign() < 0) os << "-";
        first = false;
        os << q.abs().str();
        if (k != 0) os << "*pi^" << k;
    }
    return os.str();
}

}  // namespace rmtsf
