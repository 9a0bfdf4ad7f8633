#pragma once

// Truncated Taylor series f(x0 + h) = sum_k c_k h^k, used to differentiate
// closed forms to high order without finite differences.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rmtsf::gue {

class Jet {
public:
    Jet(std::size_t order, double value) : c_(order + 1, 0.0) { c_[0] = value; }
    explicit Jet(std::vector<double> c) : c_(std::move(c)) {
        if (c_.empty()) throw std::invalid_argument("Jet: empty coefficient list");
    }
    /// The identity jet x0 + h.
    static Jet variable(std::size_t order, double x0) {
        Jet j(order, x0);
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    std::size_t order() const { return c_.size() - 1; }
    double operator[](std::size_t k) const { return c_[k]; }
    double value() const { return c_[0]; }
    /// k-th derivative at x0.
    double derivative(std::size_t k) const {
        double f = 1.0;
        for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
        return c_.at(k) * f;
    }

    Jet operator-() const {
        Jet r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Jet& operator+=(const Jet& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) { return *this += -o; }
    Jet& operator*=(double s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, double s) {
        a.c_[0] += s;
        return a;
    }
    friend Jet operator+(double s, Jet a) { return a + s; }
    friend Jet operator-(double s, const Jet& a) { return (-a) + s; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        a.check(b);
        Jet r(a.order(), 0.0);
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
            r.c_[k] = s;
        }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b) {
        a.check(b);
        if (b.c_[0] == 0.0) throw std::domain_error("Jet: division by a jet with zero constant term");
        Jet q(a.order(), 0.0);
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            double s = a.c_[k];
            for (std::size_t i = 1; i <= k; ++i) s -= b.c_[i] * q.c_[k - i];
            q.c_[k] = s / b.c_[0];
        }
        return q;
    }

    /// d/dh, dropping the top order.
    Jet differentiated() const {
        if (order() == 0) return Jet(0, 0.0);
        std::vector<double> d(order());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = static_cast<double>(k + 1) * c_[k + 1];
        return Jet(std::move(d));
    }
    /// Antiderivative with the given constant term; the order rises by one.
    Jet integrated(double constant) const {
        std::vector<double> r(c_.size() + 1);
        r[0] = constant;
        for (std::size_t k = 1; k < r.size(); ++k) r[k] = c_[k - 1] / static_cast<double>(k);
        return Jet(std::move(r));
    }
    /// Substitution h -> s h.
    Jet rescaled(double s) const {
        Jet r = *this;
        double p = 1.0;
        for (auto& v : r.c_) {
            v *= p;
            p *= s;
        }
        return r;
    }

    friend Jet log(const Jet& u) {
        if (!(u.value() > 0.0)) throw std::domain_error("Jet: log of a jet with nonpositive constant term");
        if (u.order() == 0) return Jet(0, std::log(u.value()));
        std::vector<double> lower(u.c_.begin(), u.c_.end() - 1);
        return (u.differentiated() / Jet(std::move(lower))).integrated(std::log(u.value()));
    }

    friend Jet sin(const Jet& u) { return sincos(u).first; }
    friend Jet cos(const Jet& u) { return sincos(u).second; }

    friend std::pair<Jet, Jet> sincos(const Jet& u) {
        Jet s(u.order(), std::sin(u.c_[0]));
        Jet c(u.order(), std::cos(u.c_[0]));
        for (std::size_t k = 1; k < u.c_.size(); ++k) {
            double ss = 0.0;
            double cc = 0.0;
            for (std::size_t j = 1; j <= k; ++j) {
                ss += static_cast<double>(j) * u.c_[j] * c.c_[k - j];
                cc -= static_cast<double>(j) * u.c_[j] * s.c_[k - j];
            }
            s.c_[k] = ss / static_cast<double>(k);
            c.c_[k] = cc / static_cast<double>(k);
        }
        return {s, c};
    }

private:
    void check(const Jet& o) const {
        if (o.c_.size() != c_.size()) throw std::invalid_argument("Jet: order mismatch");
    }
    std::vector<double> c_;
};

}  // namespace rmtsf::gue
