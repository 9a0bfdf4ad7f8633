#include "commands.hpp"

#include "rmtsf/algebra/serialize.hpp"
#include "rmtsf/gue/form_factor.hpp"
#include "rmtsf/gue/limits.hpp"
#include "rmtsf/gue/sff.hpp"
#include "rmtsf/ode/references.hpp"
#include "rmtsf/ode/selberg.hpp"
#include "rmtsf/series/analysis.hpp"
#include "rmtsf/structure/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace cli {

using namespace rmtsf;

namespace {

json exact(const DiffOperator& op) {
    json coeffs = json::array();
    for (const auto& p : op.coefficients()) coeffs.push_back(p.str());
    return {{"text", op.str()}, {"coefficients", coeffs}, {"canonical", to_json(op)}};
}

json exact(const PiLaurent& v) {
    return {{"text", v.str()}, {"canonical", to_json(v)}};
}

json strings(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(q.str());
    return out;
}

json zero_report(const Settings& s, const structure::ZeroReport& z) {
    json roots = json::array();
    for (const auto& r : z.roots) roots.push_back({s.number(r.real()), s.number(r.imag())});
    return {{"roots", roots}, {"max_deviation", s.number(z.max_deviation)}};
}

}  // namespace

int derive_ode(const Settings& s, const DeriveOdeArgs& a) {
    if (a.finite_n && a.fourier) throw std::invalid_argument("--finite-N and --fourier are exclusive");
    if (a.finite_n && a.check) throw std::invalid_argument("--check-paper applies to bulk and Fourier operators only");

    const auto params = ode::specialize_circular(a.beta);
    DiffOperator op = ode::eliminate(params);
    std::string kind = "finite_n";
    if (!a.finite_n) {
        op = ode::bulk_limit(op);
        kind = "bulk";
        if (a.fourier) {
            op = ode::fourier_side(op);
            kind = "fourier";
        }
    }

    json out = {{"beta", a.beta}, {"kind", kind}, {"order", op.order()}, {"operator", exact(op)}};
    int code = kOk;
    if (a.check) {
        const auto ref = ode::find_reference(a.beta, a.fourier);
        if (!ref) throw std::invalid_argument("no reference operator for beta = " + std::to_string(a.beta));
        const auto chk = ode::check_against_reference(op, *ref);
        json errata = json::array();
        for (const auto& e : ref->errata) {
            errata.push_back({{"derivative", e.derivative}, {"recorded", e.recorded}, {"corrected", e.corrected},
                              {"reason", e.reason}});
        }
        out["reference_check"] = {{"reference", chk.name},     {"match", chk.match},
                                  {"matches_recorded", chk.matches_recorded}, {"partial", ref->partial},
                                  {"mismatches", chk.mismatches}, {"errata", errata}};
        if (!chk.match) code = kFailed;
        if (!errata.empty()) std::cerr << "note: reference has " << errata.size() << " corrected coefficient(s)\n";
    }
    emit_json(s, std::move(out));
    return code;
}

int series(const Settings& s, const SeriesArgs& a) {
    if (a.terms < 1) throw std::invalid_argument("--terms must be positive");
    const DiffOperator op = ode::circular_bulk_operator(a.beta);
    json out = {{"beta", a.beta}, {"at", a.at}, {"operator", op.str()}};
    if (a.at == "zero") {
        const auto ind = series::indicial_roots(op);
        json roots = json::array();
        for (const auto& [r, m] : ind.roots) roots.push_back({{"root", r.str()}, {"multiplicity", m}});
        out["indicial_polynomial"] = strings(ind.polynomial);
        out["roots"] = roots;
        out["root_list"] = strings(ind.root_list());
        out["unresolved_factor"] = strings(ind.unresolved);
        if (a.exponent) {
            const auto f = series::frobenius(op, Rational::parse(*a.exponent), a.terms);
            json c = json::array();
            for (const auto& v : f.coefficients()) c.push_back(v.str());
            out["frobenius"] = {{"exponent", f.exponent().str()}, {"coefficients", c}, {"text", f.str()},
                                {"canonical", to_json(f)}};
        }
    } else {
        if (a.exponent) throw std::invalid_argument("--exponent applies to --at zero");
        const auto e = series::asymptotic_nonoscillatory(op, a.terms);
        json c = json::array();
        for (const auto& v : e.c) c.push_back(exact(v));
        out["c"] = c;
        out["canonical"] = to_json(e.series());
        json osc = json::array();
        for (const auto& o : series::oscillatory_exponents(op)) {
            osc.push_back({{"frequency", o.frequency}, {"decay", o.decay.str()}});
        }
        out["oscillatory"] = osc;
    }
    emit_json(s, std::move(out));
    return kOk;
}

int structure_coeff(const Settings& s, const StructureArgs& a) {
    json out = {{"order", a.order}};
    std::vector<Rational> factor;
    std::optional<structure::K10Solution> k10;
    if (a.order == 8) {
        factor = structure::k8_factor();
        out["form"] = "(1/(2 pi x))^8 (x - 1)^2 Q(x), x = beta/2";
    } else {
        k10 = structure::solve_k10();
        factor = k10->b.coefficients();
        out["form"] = "(1/(2 pi x))^10 (x - 1)^2 P(x), x = beta/2";
        out["overdetermined"] = strings({k10->overdetermined.begin(), k10->overdetermined.end()});
        json res = json::array();
        const auto cons = structure::k10_constraints();
        for (std::size_t i = 0; i < cons.size(); ++i) {
            res.push_back({{"constraint", cons[i].name}, {"residual", k10->residuals[i].str()}});
        }
        out["constraints"] = res;
    }
    out["coefficients"] = strings(factor);

    if (a.beta) {
        const Rational x = Rational::parse(*a.beta) / Rational(2);
        const PiLaurent v = a.order == 8 ? structure::k8_coefficient(x) : structure::k10_coefficient(k10->b, x);
        out["at_beta"] = {{"beta", a.beta->c_str()}, {"value", exact(v)}, {"numeric", s.number(v.to_double())}};
    }

    int code = kOk;
    if (a.check_zeros) {
        const auto z = structure::zeros_on_unit_circle(factor);
        json zeros = zero_report(s, z);
        bool ok = z.max_deviation < 1e-8;
        if (a.order == 10) {
            const bool inter = structure::interlaced(structure::zeros_on_unit_circle(structure::k8_factor()), z);
            zeros["interlaced_with_order_8"] = inter;
            ok = ok && inter;
        }
        zeros["pass"] = ok;
        out["zeros"] = zeros;
        if (!ok) code = kFailed;
    }
    emit_json(s, std::move(out));
    return code;
}

int sff(const Settings& s, const SffArgs& a) {
    const auto curve = gue::sff_curve(a.n, gue::uniform_grid(a.kmax, a.points), s.policy());
    const std::vector<std::string> cols = {"k", "tau_g", "tau_b", "connected", "disconnected", "error"};
    auto row = [&](std::size_t i) {
        return std::vector<double>{curve.k[i],         curve.tau_global(i),     curve.tau_bulk(i),
                                   curve.connected[i], curve.disconnected[i], curve.connected_error[i]};
    };
    if (a.format == "csv") {
        std::ostringstream os;
        for (std::size_t j = 0; j < cols.size(); ++j) os << (j ? "," : "") << cols[j];
        os << "\n";
        for (std::size_t i = 0; i < curve.k.size(); ++i) {
            const auto r = row(i);
            for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << s.format(r[j]);
            os << "\n";
        }
        emit_csv(s, os.str());
    } else {
        json data = json::array();
        for (std::size_t i = 0; i < curve.k.size(); ++i) {
            json r = json::array();
            for (double v : row(i)) r.push_back(s.number(v));
            data.push_back(r);
        }
        emit_json(s, {{"n", a.n}, {"columns", cols}, {"data", data}});
    }
    return kOk;
}

namespace {

json ladder(const Settings& s, const std::vector<int>& ns, const std::vector<double>& errors) {
    std::vector<double> nd(ns.begin(), ns.end());
    std::vector<double> abs_err;
    for (double e : errors) abs_err.push_back(std::abs(e));
    json rows = json::array();
    for (std::size_t i = 0; i < ns.size(); ++i) rows.push_back({{"n", ns[i]}, {"error", s.number(errors[i])}});
    json out = {{"errors", rows}};
    const bool fittable = ns.size() >= 2 && std::all_of(abs_err.begin(), abs_err.end(), [](double e) { return e > 0; });
    out["slope"] = fittable ? s.number(gue::log_log_slope(nd, abs_err)) : json(nullptr);
    return out;
}

}  // namespace

int scaling(const Settings& s, const ScalingArgs& a) {
    const auto pol = s.policy();
    json out = {{"regime", a.regime}};
    if (a.regime == "global") {
        const auto ns = a.ns.empty() ? std::vector<int>{8, 16, 32, 64} : a.ns;
        const double t1 = a.tau.value_or(1.3);
        const double t2 = t1 + 1.0;
        std::vector<double> em, es, ec;
        for (int n : ns) {
            em.push_back(gue::global_mean_finite(n, t1) - gue::global_mean_limit(t1));
            es.push_back(gue::global_sbar_finite(n, t1, pol) - gue::global_sbar_limit(t1));
            ec.push_back(gue::global_cov_finite(n, t1, t2, pol) - gue::global_cov_limit(t1, t2));
        }
        out["tau"] = s.number(t1);
        out["mean"] = ladder(s, ns, em);
        out["mean"]["limit"] = s.number(gue::global_mean_limit(t1));
        out["connected"] = ladder(s, ns, es);
        out["connected"]["limit"] = s.number(gue::global_sbar_limit(t1));
        out["covariance"] = ladder(s, ns, ec);
        out["covariance"]["tau2"] = s.number(t2);
        out["covariance"]["limit"] = s.number(gue::global_cov_limit(t1, t2));
    } else if (a.regime == "bulk") {
        const auto ns = a.ns.empty() ? std::vector<int>{8, 16, 32, 64} : a.ns;
        const double tau = a.tau.value_or(0.5);
        const double gamma = a.gamma.value_or(0.0);
        std::vector<double> err;
        for (int n : ns) {
            const double finite =
                gamma == 0.0 ? gue::bulk_ramp_finite(n, tau, pol) : gue::bulk_complex_finite(n, gamma, tau, pol).real();
            err.push_back(finite - gue::bulk_complex_limit(gamma, tau, pol));
        }
        out["tau"] = s.number(tau);
        out["gamma"] = s.number(gamma);
        out["ramp"] = ladder(s, ns, err);
        out["ramp"]["limit"] = s.number(gue::bulk_complex_limit(gamma, tau, pol));
    } else {
        const auto ns = a.ns.empty() ? std::vector<int>{200, 400, 800} : a.ns;
        const double gamma = a.gamma.value_or(1.0);
        const double limit = gue::soft_mean_limit(gamma);
        const auto q = gue::soft_mean_quadrature(gamma, pol);
        const auto qc = gue::soft_cov_quadrature(gamma, gamma);
        std::vector<double> err;
        for (int n : ns) err.push_back(gue::soft_mean_finite(n, gamma) - limit);
        bool monotone = true;
        for (std::size_t i = 1; i < err.size(); ++i) monotone = monotone && std::abs(err[i]) < std::abs(err[i - 1]);
        out["gamma"] = s.number(gamma);
        out["mean"] = ladder(s, ns, err);
        out["mean"]["limit"] = s.number(limit);
        out["mean"]["quadrature"] = s.number(q.value);
        out["mean"]["monotone"] = monotone;
        out["covariance"] = {{"limit", s.number(gue::soft_cov_limit(gamma, gamma))}, {"quadrature", s.number(qc.value)}};
    }
    emit_json(s, std::move(out));
    return kOk;
}

}  // namespace cli
