#include "rmtsf/ode/references.hpp"

#include <stdexcept>

namespace rmtsf::ode {

namespace {

DiffOperator build(Var v, const std::vector<std::string>& coeffs) {
    std::vector<Poly> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(s.empty() ? Poly() : parse_poly(s));
    return DiffOperator(v, std::move(c));
}

std::vector<ReferenceOperator> make_references() {
    std::vector<ReferenceOperator> r;
    r.push_back({"bulk_beta2", 2, false, Var::X, {"-4", "4*pi^2*X^3 - 2*X", "4*X^2", "X^3"}, false, {}});
    r.push_back({"bulk_beta4",
                 4,
                 false,
                 Var::X,
                 {"-32*pi^2*X^2 + 16", "64*pi^4*X^5 - 48*pi^2*X^3 - 16*X", "64*pi^2*X^4 - 40*X^2",
                  "20*pi^2*X^5 + 12*X^3", "10*X^4", "X^5"},
                 false,
                 {}});
    r.push_back({"bulk_beta6",
                 6,
                 false,
                 Var::X,
                 {"-1008 + 6336*pi^2*X^2 - 6912*pi^4*X^4", "2808*X + 144*pi^2*X^3 - 17280*pi^4*X^5 + 20736*pi^6*X^7",
                  "2688*X^2 - 18144*pi^2*X^4 + 20736*pi^4*X^6", "-3924*X^3 + 4080*pi^2*X^5 + 7056*pi^4*X^7",
                  "-692*X^4 + 4704*pi^2*X^6", "700*X^5 + 504*pi^2*X^7", "168*X^6", "9*X^7"},
                 false,
                 {{4, "-692*X^4 + 4704*pi^2*X^6", "-696*X^4 + 4704*pi^2*X^6",
                   "with -692 the operator does not annihilate the non-oscillatory asymptotic series "
                   "1 - 1/(6 pi^2 X^2) + ...; the residual is -80/pi^2 at order X^-2"}}});
    r.push_back({"bulk_beta8_partial",
                 8,
                 false,
                 Var::X,
                 {"20000 - 259584*pi^2*X^2 + 688128*pi^4*X^4 - 589824*pi^6*X^6", "", "", "", "", "", "",
                  "4056*X^7 + 1920*pi^2*X^9", "480*X^8", "16*X^9"},
                 true,
                 {}});
    r.push_back({"fourier_beta4",
                 4,
                 true,
                 Var::K,
                 {"0", "0", "-28*k^2 + 320*pi^2", "-52*k^3 + 640*k*pi^2", "-320*pi^4 + 236*k^2*pi^2 - 15*k^4",
                  "-64*k*pi^4 + 20*k^3*pi^2 - k^5"},
                 false,
                 {}});
    return r;
}

}  // namespace

DiffOperator ReferenceOperator::as_recorded() const { return build(variable, coefficients); }

DiffOperator ReferenceOperator::op() const {
    std::vector<std::string> c = coefficients;
    for (const auto& e : errata) c.at(static_cast<std::size_t>(e.derivative)) = e.corrected;
    return build(variable, c);
}

std::vector<int> ReferenceOperator::listed_orders() const {
    std::vector<int> o;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (!partial || !coefficients[j].empty()) o.push_back(static_cast<int>(j));
    }
    return o;
}

const std::vector<ReferenceOperator>& reference_operators() {
    static const std::vector<ReferenceOperator> refs = make_references();
    return refs;
}

std::optional<ReferenceOperator> find_reference(int beta, bool fourier) {
    for (const auto& r : reference_operators()) {
        if (r.beta == beta && r.fourier == fourier) return r;
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> compare(const DiffOperator& derived, const DiffOperator& ref, const ReferenceOperator& meta) {
    std::vector<std::string> out;
    if (derived.variable() != ref.variable()) return {"variable differs"};
    if (!meta.partial) {
        const DiffOperator a = normalize(derived);
        const DiffOperator b = normalize(ref);
        const int top = std::max(a.order(), b.order());
        for (int j = 0; j <= top; ++j) {
            if (a.coefficient(j) != b.coefficient(j)) {
                out.push_back("order " + std::to_string(j) + ": derived " + a.coefficient(j).str() + ", reference " +
                              b.coefficient(j).str());
            }
        }
        return out;
    }
    // Partial: scale the derived operator so its top coefficient equals the reference's.
    if (derived.order() != ref.order()) return {"order differs"};
    const Poly& dt = derived.coefficient(derived.order());
    const Poly& rt = ref.coefficient(ref.order());
    if (dt.terms().size() != 1 || rt.terms().size() != 1 || dt.leading_monomial() != rt.leading_monomial()) {
        return {"top coefficients are not proportional monomials"};
    }
    const GaussianRational scale = rt.leading_coefficient() * dt.leading_coefficient().inverse();
    for (int j : meta.listed_orders()) {
        const Poly d = derived.coefficient(j) * scale;
        if (d != ref.coefficient(j)) {
            out.push_back("order " + std::to_string(j) + ": derived " + d.str() + ", reference " + ref.coefficient(j).str());
        }
    }
    return out;
}

}  // namespace

ReferenceCheck check_against_reference(const DiffOperator& derived, const ReferenceOperator& ref) {
    ReferenceCheck c;
    c.name = ref.name;
    c.mismatches = compare(derived, ref.op(), ref);
    c.match = c.mismatches.empty();
    c.matches_recorded = ref.errata.empty() ? c.match : compare(derived, ref.as_recorded(), ref).empty();
    return c;
}

}  // namespace rmtsf::ode
