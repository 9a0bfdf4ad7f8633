#include "rmtsf/algebra/poly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace rmtsf {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames{"X", "k", "z", "pi", "N"};

void check_exponents(const Monomial& m) {
    for (Var v : kAllVars) {
        if (v != Var::N && exponent(m, v) < 0) {
            throw std::domain_error("Poly: negative exponent for indeterminate " +
                                    std::string(var_name(v)));
        }
    }
}

Monomial add_monomials(const Monomial& a, const Monomial& b) {
    Monomial r{};
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (Var v : kAllVars) {
        if (kVarNames[static_cast<std::size_t>(v)] == name) return v;
    }
    return std::nullopt;
}

Poly::Poly(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Poly Poly::var(Var v, int power) {
    Monomial m{};
    exponent(m, v) = power;
    return term(GaussianRational(1), m);
}

Poly Poly::term(GaussianRational c, const Monomial& m) {
    check_exponents(m);
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

Poly Poly::from_terms(TermMap terms) {
    Poly p;
    for (auto& [m, c] : terms) {
        check_exponents(m);
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

int Poly::degree(Var v) const {
    if (terms_.empty()) throw std::domain_error("Poly::degree of zero polynomial");
    int d = INT_MIN;
    for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, v));
    return d;
}

int Poly::min_degree(Var v) const {
    if (terms_.empty()) throw std::domain_error("Poly::min_degree of zero polynomial");
    int d = INT_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, exponent(m, v));
    return d;
}

bool Poly::free_of(Var v) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [v](const auto& t) { return exponent(t.first, v) == 0; });
}

std::optional<Var> Poly::sole_variable() const {
    std::optional<Var> found;
    for (Var v : kAllVars) {
        if (free_of(v)) continue;
        if (found) return std::nullopt;
        found = v;
    }
    return found;
}

GaussianRational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational{} : it->second;
}

Poly Poly::coefficient_of(Var v, int e) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (exponent(m, v) != e) continue;
        Monomial mm = m;
        exponent(mm, v) = 0;
        r.terms_.emplace(mm, c);
    }
    return r;
}

std::map<int, Poly> Poly::collect(Var v) const {
    std::map<int, Poly> r;
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        exponent(mm, v) = 0;
        r[exponent(m, v)].terms_.emplace(mm, c);
    }
    return r;
}

Poly Poly::derivative(Var v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        const int e = exponent(m, v);
        if (e == 0) continue;
        Monomial mm = m;
        exponent(mm, v) = e - 1;
        r.add_term(mm, c * GaussianRational(static_cast<long>(e)));
    }
    return r;
}

Poly Poly::shift(Var v, int delta) const {
    Monomial m{};
    exponent(m, v) = delta;
    return shift(m);
}

Poly Poly::shift(const Monomial& s, int sign) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        for (std::size_t i = 0; i < kNumVars; ++i) mm[i] += sign * s[i];
        check_exponents(mm);
        r.terms_.emplace_hint(r.terms_.end(), mm, c);
    }
    return r;
}

Poly Poly::substitute(Var v, const Poly& value) const {
    Poly r;
    std::map<int, Poly> powers;
    for (const auto& [e, coeff] : collect(v)) {
        if (e < 0) throw std::domain_error("Poly::substitute: negative exponent");
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, value.pow(static_cast<unsigned>(e))).first;
        r += coeff * it->second;
    }
    return r;
}

bool Poly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

Poly Poly::real_part() const {
    return map_coefficients([](const GaussianRational& c) { return GaussianRational(c.re); });
}

Poly Poly::imag_part() const {
    return map_coefficients([](const GaussianRational& c) { return GaussianRational(c.im); });
}

Poly Poly::conj() const {
    return map_coefficients([](const GaussianRational& c) { return c.conj(); });
}

const GaussianRational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading_coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading_monomial of zero polynomial");
    return terms_.rbegin()->first;
}

Monomial Poly::common_monomial() const {
    if (terms_.empty()) return Monomial{};
    Monomial r = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < kNumVars; ++i) r[i] = std::min(r[i], m[i]);
    }
    return r;
}

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
    return map_coefficients([](const GaussianRational& c) { return -c; });
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(add_monomials(ma, mb), ca * cb);
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::map_coefficients(const std::function<GaussianRational(const GaussianRational&)>& f) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        GaussianRational v = f(c);
        if (!v.is_zero()) r.terms_.emplace_hint(r.terms_.end(), m, std::move(v));
    }
    return r;
}

std::complex<double> Poly::evaluate(const std::array<std::complex<double>, kNumVars>& values) const {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        std::complex<double> t{c.re.to_double(), c.im.to_double()};
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (m[i] != 0) t *= std::pow(values[i], m[i]);
        }
        sum += t;
    }
    return sum;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest monomial first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coeff = c.str();
        const bool negative = c.is_real() ? c.re.sign() < 0 : c.re.is_zero() && c.im.sign() < 0;
        if (negative) coeff = (-c).str();
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        const bool unit = c.is_real() && c.re.abs().is_one();
        bool wrote = false;
        if (!unit || m == Monomial{}) {
            os << coeff;
            wrote = true;
        }
        for (Var v : kAllVars) {
            const int e = exponent(m, v);
            if (e == 0) continue;
            if (wrote) os << "*";
            os << var_name(v);
            if (e != 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

Poly parse_poly(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos) +
                                    " in '" + std::string(text) + "'");
    };
    auto read_int = [&]() -> std::string {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    };

    Poly result;
    skip_ws();
    if (pos == text.size()) fail("empty expression");
    bool first_term = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first_term) {
            fail("expected '+' or '-'");
        }
        first_term = false;

        GaussianRational coeff(sign);
        Monomial mono{};
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos == text.size()) fail("dangling operator");
            const char ch = text[pos];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num = read_int();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    num += "/" + read_int();
                }
                coeff *= GaussianRational(Rational::parse(num));
            } else if (ch == '(') {
                // Parenthesised scalar, as written for non-real coefficients.
                const std::size_t close = text.find(')', pos);
                if (close == std::string_view::npos) fail("unmatched '('");
                const Poly inner = parse_poly(text.substr(pos + 1, close - pos - 1));
                if (!inner.is_constant()) fail("parenthesised factor must be a scalar");
                coeff *= inner.is_zero() ? GaussianRational(0) : inner.leading_coefficient();
                pos = close + 1;
            } else if (std::isalpha(static_cast<unsigned char>(ch))) {
                const std::size_t start = pos;
                while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
                const std::string_view name = text.substr(start, pos - start);
                int e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    int esign = 1;
                    if (pos < text.size() && text[pos] == '-') {
                        esign = -1;
                        ++pos;
                    }
                    e = esign * std::stoi(read_int());
                }
                if (name == "i") {
                    coeff *= GaussianRational::i_power(e);
                } else if (auto v = var_from_name(name)) {
                    exponent(mono, *v) += e;
                } else {
                    fail("unknown symbol '" + std::string(name) + "'");
                }
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
            } else {
                expect_factor = false;
            }
        }
        result += Poly::term(coeff, mono);
    }
    return result;
}

Rational rational_content(const std::vector<Poly>& ps) {
    mpz_class g = 0;
    mpz_class l = 1;
    auto absorb = [&](const Rational& r) {
        if (r.is_zero()) return;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.numerator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.denominator().get_mpz_t());
    };
    for (const auto& p : ps) {
        for (const auto& [m, c] : p.terms()) {
            absorb(c.re);
            absorb(c.im);
        }
    }
    if (g == 0) return Rational(0);
    return Rational(g, l);
}

Rational rational_content(const Poly& p) { return rational_content(std::vector<Poly>{p}); }

std::pair<Poly, Poly> divide_in(const Poly& dividend, const Poly& divisor, Var v) {
    if (divisor.is_zero()) throw std::domain_error("divide_in: division by zero polynomial");
    const int dd = divisor.degree(v);
    const Poly lead = divisor.coefficient_of(v, dd);
    if (!lead.is_constant()) throw std::domain_error("divide_in: divisor leading coefficient is not a scalar");
    const GaussianRational lead_inv = lead.leading_coefficient().inverse();

    Poly quotient;
    Poly rem = dividend;
    while (!rem.is_zero() && rem.degree(v) >= dd) {
        const int dr = rem.degree(v);
        const Poly t = rem.coefficient_of(v, dr).shift(v, dr - dd) * lead_inv;
        quotient += t;
        rem -= t * divisor;
    }
    return {quotient, rem};
}

Poly univariate_gcd(const Poly& a, const Poly& b, Var v) {
    for (const Poly* p : {&a, &b}) {
        for (Var w : kAllVars) {
            if (w != v && !p->free_of(w)) {
                throw std::domain_error("univariate_gcd: polynomial not univariate in " + std::string(var_name(v)));
            }
        }
    }
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divide_in(x, y, v).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * x.leading_coefficient().inverse();
}

}  // namespace rmtsf
