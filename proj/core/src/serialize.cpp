#include "rmtsf/algebra/serialize.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace rmtsf {

using nlohmann::json;

namespace {

json vars_header() {
    json v = json::array();
    for (Var x : kAllVars) v.push_back(std::string(var_name(x)));
    return v;
}

void check_vars(const json& j) {
    if (j.at("vars") != vars_header()) throw std::invalid_argument("json: unexpected variable header");
}

json rational_pair(const Rational& r) { return json::array({r.numerator().get_str(), r.denominator().get_str()}); }

Rational read_rational(const json& num, const json& den) {
    return Rational(mpz_class(num.get<std::string>()), mpz_class(den.get<std::string>()));
}

json poly_terms(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t = json::array({json(m), c.re.numerator().get_str(), c.re.denominator().get_str()});
        if (!c.is_real()) {
            t.push_back(c.im.numerator().get_str());
            t.push_back(c.im.denominator().get_str());
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

Poly read_poly_terms(const json& terms) {
    Poly::TermMap map;
    for (const auto& t : terms) {
        if (t.size() != 3 && t.size() != 5) throw std::invalid_argument("json: malformed term");
        const auto m = t.at(0).get<Monomial>();
        GaussianRational c(read_rational(t.at(1), t.at(2)));
        if (t.size() == 5) c.im = read_rational(t.at(3), t.at(4));
        map.emplace(m, c);
    }
    return Poly::from_terms(std::move(map));
}

json pi_terms(const PiLaurent& v) {
    json terms = json::array();
    for (const auto& [k, q] : v.terms()) terms.push_back(json::array({k, q.numerator().get_str(), q.denominator().get_str()}));
    return terms;
}

PiLaurent read_pi_terms(const json& terms) {
    PiLaurent v;
    for (const auto& t : terms) v += PiLaurent(read_rational(t.at(1), t.at(2)), t.at(0).get<int>());
    return v;
}

json parse_json(std::string_view text, std::string_view type) {
    json j = json::parse(text);
    if (j.at("type") != type) throw std::invalid_argument("json: expected type " + std::string(type));
    return j;
}

}  // namespace

std::string to_json(const Poly& p) {
    return json{{"type", "poly"}, {"vars", vars_header()}, {"terms", poly_terms(p)}}.dump();
}

std::string to_json(const PiLaurent& v) { return json{{"type", "pi_laurent"}, {"terms", pi_terms(v)}}.dump(); }

std::string to_json(const DiffOperator& op) {
    json coeffs = json::array();
    for (const auto& p : op.coefficients()) coeffs.push_back(poly_terms(p));
    return json{{"type", "diff_operator"},
                {"vars", vars_header()},
                {"variable", std::string(var_name(op.variable()))},
                {"coeffs", coeffs}}
        .dump();
}

std::string to_json(const FormalSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(pi_terms(c));
    return json{{"type", "formal_series"},
                {"kind", s.kind() == SeriesKind::FrobeniusAtZero ? "frobenius_at_zero" : "asymptotic_at_infinity"},
                {"variable", std::string(var_name(s.variable()))},
                {"exponent", rational_pair(s.exponent())},
                {"truncation", s.truncation()},
                {"coefficients", coeffs}}
        .dump();
}

Poly poly_from_json(std::string_view text) {
    const json j = parse_json(text, "poly");
    check_vars(j);
    return read_poly_terms(j.at("terms"));
}

PiLaurent pi_laurent_from_json(std::string_view text) { return read_pi_terms(parse_json(text, "pi_laurent").at("terms")); }

DiffOperator diff_operator_from_json(std::string_view text) {
    const json j = parse_json(text, "diff_operator");
    check_vars(j);
    const auto v = var_from_name(j.at("variable").get<std::string>());
    if (!v) throw std::invalid_argument("json: unknown variable");
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(read_poly_terms(c));
    return DiffOperator(*v, std::move(coeffs));
}

FormalSeries formal_series_from_json(std::string_view text) {
    const json j = parse_json(text, "formal_series");
    const std::string kind = j.at("kind").get<std::string>();
    SeriesKind k;
    if (kind == "frobenius_at_zero") k = SeriesKind::FrobeniusAtZero;
    else if (kind == "asymptotic_at_infinity") k = SeriesKind::AsymptoticAtInfinity;
    else throw std::invalid_argument("json: unknown series kind");
    const auto v = var_from_name(j.at("variable").get<std::string>());
    if (!v) throw std::invalid_argument("json: unknown variable");
    std::vector<PiLaurent> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(read_pi_terms(c));
    const auto& e = j.at("exponent");
    return FormalSeries(k, *v, read_rational(e.at(0), e.at(1)), std::move(coeffs), j.at("truncation").get<int>());
}

}  // namespace rmtsf
