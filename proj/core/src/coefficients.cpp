#include "rmtsf/structure/coefficients.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rmtsf::structure {

namespace {

Rational pow2(int e) { return Rational(2).pow(e); }

PiLaurent pi_scale(const Rational& x, int power) {
    // (1/(2 pi x))^power
    if (x.is_zero()) throw std::domain_error("structure coefficient: pole at x = 0");
    return PiLaurent((Rational(2) * x).pow(-power), -power);
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
    Rational r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace

PiLaurent SmallKExpansion::f_coefficient(int j) const {
    auto it = alpha.find(j + 1);
    if (it == alpha.end()) throw std::out_of_range("SmallKExpansion: coefficient not determined");
    return it->second.scaled(beta).times_pi(1);
}

SmallKExpansion small_k_from_cn(const series::AsymptoticExpansion& c, const Rational& beta) {
    SmallKExpansion out;
    out.beta = beta;
    for (std::size_t n = 1; n < c.c.size(); ++n) {
        const int p = static_cast<int>(2 * n - 1);
        const Rational scale = Rational(n % 2 == 0 ? 1 : -1) * Rational(mpz_class(1), factorial(p));
        out.alpha[p] = c.c[n].scaled(scale).times_pi(1);
    }
    return out;
}

PiLaurent cn_from_f_coefficient(int n, const Rational& beta, const PiLaurent& f_coeff) {
    if (n < 1) throw std::invalid_argument("cn_from_f_coefficient: n must be positive");
    const Rational scale = Rational(n % 2 == 0 ? 1 : -1) * Rational(factorial(2 * n - 1)) / beta;
    return f_coeff.scaled(scale).times_pi(-2);
}

PalindromicPoly::PalindromicPoly(std::array<Rational, 5> half) : half_(std::move(half)) {}

PalindromicPoly PalindromicPoly::from_full(const std::vector<Rational>& b) {
    if (b.size() != 9) throw std::invalid_argument("PalindromicPoly: expected 9 coefficients");
    for (int l = 0; l < 9; ++l) {
        if (b[static_cast<std::size_t>(l)] != b[static_cast<std::size_t>(8 - l)]) {
            throw std::invalid_argument("PalindromicPoly: coefficients are not palindromic");
        }
    }
    return PalindromicPoly({b[0], b[1], b[2], b[3], b[4]});
}

const Rational& PalindromicPoly::operator[](int l) const {
    if (l < 0 || l > 8) throw std::out_of_range("PalindromicPoly: index out of range");
    return half_[static_cast<std::size_t>(std::min(l, 8 - l))];
}

std::vector<Rational> PalindromicPoly::coefficients() const {
    std::vector<Rational> c;
    for (int l = 0; l <= 8; ++l) c.push_back((*this)[l]);
    return c;
}

Rational PalindromicPoly::evaluate(const Rational& x) const { return horner(coefficients(), x); }

std::vector<Rational> k8_factor() {
    const Rational a(-263, 84), b(1697, 315), c(-6337, 1008);
    return {1, a, b, c, b, a, 1};
}

PiLaurent k8_coefficient(const Rational& x) {
    const Rational xm1 = x - Rational(1);
    return pi_scale(x, 8).scaled(xm1 * xm1 * horner(k8_factor(), x));
}

PiLaurent k10_coefficient(const PalindromicPoly& p, const Rational& x) {
    const Rational xm1 = x - Rational(1);
    return pi_scale(x, 10).scaled(xm1 * xm1 * p.evaluate(x));
}

Rational b1_from_small_beta() {
    Rational s;
    for (int q = 1; q <= 11; ++q) s += (Rational(1) - pow2(q - 11)) / Rational(q);
    return Rational(2) - Rational(2) * s;
}

std::vector<LinearConstraint> k10_constraints() {
    std::vector<LinearConstraint> out;

    LinearConstraint lead{"leading", {}, Rational(1)};
    lead.weight[0] = 1;
    out.push_back(lead);

    // -sum_q (1 - 2^{q-11})/q = (b_1 - 2)/2
    LinearConstraint small{"small_beta", {}, Rational(0)};
    small.weight[1] = Rational(1, 2);
    Rational s;
    for (int q = 1; q <= 11; ++q) s += (Rational(1) - pow2(q - 11)) / Rational(q);
    small.rhs = Rational(1) - s;
    out.push_back(small);

    // Written on the free half b_0..b_4.
    LinearConstraint ft{"beta_1_fourier", {}, Rational(1, 5)};
    ft.weight[0] = Rational(1) + pow2(-8);
    ft.weight[1] = pow2(-1) + pow2(-7);
    ft.weight[2] = pow2(-2) + pow2(-6);
    ft.weight[3] = pow2(-3) + pow2(-5);
    ft.weight[4] = pow2(-4);
    out.push_back(ft);

    LinearConstraint d4{"beta_4_derivative", {}, Rational(1949, 275251200)};
    for (int l = 0; l <= 8; ++l) {
        d4.weight[static_cast<std::size_t>(l)] = pow2(-22) * pow2(l) * (Rational(1) + Rational(l - 11, 4));
    }
    out.push_back(d4);

    LinearConstraint a6{"beta_6_asymptotic", {}, Rational(681505, 729)};
    const Rational pre = Rational(factorial(11)) / Rational(6).pow(11) * Rational(4);
    for (int l = 0; l <= 8; ++l) a6.weight[static_cast<std::size_t>(l)] = pre * Rational(3).pow(l);
    out.push_back(a6);
    return out;
}

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    if (a.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("solve_exact: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

namespace {

// Weight of b_l (l = 0..4) once b_{8-l} = b_l is imposed.
Rational folded(const LinearConstraint& c, int l) {
    const auto& w = c.weight;
    return l == 4 ? w[4] : w[static_cast<std::size_t>(l)] + w[static_cast<std::size_t>(8 - l)];
}

}  // namespace

K10Solution solve_k10() {
    const auto cons = k10_constraints();
    const Rational b0(1);
    const Rational b1 = b1_from_small_beta();

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    for (std::size_t i = 2; i < 5; ++i) {
        const auto& c = cons[i];
        a.push_back({folded(c, 2), folded(c, 3), folded(c, 4)});
        rhs.push_back(c.rhs - folded(c, 0) * b0 - folded(c, 1) * b1);
    }
    const auto x = solve_exact(a, rhs);
    PalindromicPoly p({b0, b1, x[0], x[1], x[2]});

    std::vector<std::vector<Rational>> a4;
    std::vector<Rational> rhs4;
    for (std::size_t i = 1; i < 5; ++i) {
        const auto& c = cons[i];
        a4.push_back({folded(c, 1), folded(c, 2), folded(c, 3), folded(c, 4)});
        rhs4.push_back(c.rhs - folded(c, 0) * b0);
    }
    const auto y = solve_exact(a4, rhs4);

    std::vector<Rational> residuals;
    const auto full = p.coefficients();
    for (const auto& c : cons) {
        Rational r = -c.rhs;
        for (int l = 0; l <= 8; ++l) r += c.weight[static_cast<std::size_t>(l)] * full[static_cast<std::size_t>(l)];
        // The Fourier constraint is written on the free half only.
        if (std::string_view(c.name) == "beta_1_fourier") {
            r = -c.rhs;
            for (int l = 0; l <= 4; ++l) r += c.weight[static_cast<std::size_t>(l)] * full[static_cast<std::size_t>(l)];
        }
        residuals.push_back(r);
    }
    return {p, {y[0], y[1], y[2], y[3]}, residuals};
}

double closed_form_S(int beta, double k) {
    constexpr double pi = std::numbers::pi;
    k = std::abs(k);
    if (beta == 2) return k < 2 * pi ? k / (2 * pi) : 1.0;
    if (beta == 4) {
        if (k == 0.0) return 0.0;
        if (k >= 4 * pi) return 1.0;
        const double t = std::abs(1.0 - k / (2 * pi));
        if (t == 0.0) return std::numeric_limits<double>::infinity();
        return k / (4 * pi) - k / (8 * pi) * std::log(t);
    }
    throw std::invalid_argument("closed_form_S: closed form known only for beta = 2 and 4");
}

ZeroReport zeros_on_unit_circle(const std::vector<Rational>& coeffs) {
    std::vector<Rational> c = coeffs;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.size() < 2) return {};
    const int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    const double lead = c.back().to_double();
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)].to_double() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    ZeroReport rep;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = es.eigenvalues()[i];
        rep.roots.push_back(z);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(std::abs(z) - 1.0));
    }
    return rep;
}

bool interlaced(const ZeroReport& inner, const ZeroReport& outer) {
    auto upper_args = [](const ZeroReport& r) {
        std::vector<double> a;
        for (const auto& z : r.roots) {
            if (z.imag() > 1e-12) a.push_back(std::arg(z));
        }
        std::sort(a.begin(), a.end());
        return a;
    };
    const auto in = upper_args(inner);
    const auto out = upper_args(outer);
    if (out.size() != in.size() + 1) return false;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (!(out[i] < in[i] && in[i] < out[i + 1])) return false;
    }
    return true;
}

}  // namespace rmtsf::structure
