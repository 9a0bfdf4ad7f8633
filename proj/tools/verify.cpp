#include "commands.hpp"

#include "rmtsf/gue/form_factor.hpp"
#include "rmtsf/gue/limits.hpp"
#include "rmtsf/gue/rho2.hpp"
#include "rmtsf/ode/selberg.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace cli {

using namespace rmtsf;

namespace {

struct Suite {
    const Settings& s;
    json checks = json::array();
    bool ok = true;

    // A check passes when value <= limit.
    void check(const std::string& name, double value, double limit) {
        const bool pass = std::isfinite(value) && value <= limit;
        ok = ok && pass;
        checks.push_back({{"name", name}, {"value", s.number(value)}, {"limit", s.number(limit)}, {"pass", pass}});
    }
    void range(const std::string& name, double value, double lo, double hi) {
        const bool pass = value >= lo && value <= hi;
        ok = ok && pass;
        checks.push_back({{"name", name}, {"value", s.number(value)}, {"range", {s.number(lo), s.number(hi)}}, {"pass", pass}});
    }
    void flag(const std::string& name, bool pass) {
        ok = ok && pass;
        checks.push_back({{"name", name}, {"pass", pass}});
    }
    void info(const std::string& name, double value) {
        checks.push_back({{"name", name}, {"value", s.number(value)}, {"info", true}});
    }
};

void identities(Suite& t) {
    const auto pol = t.s.policy();
    double worst = 0.0;
    for (int n : {1, 2, 5, 10}) {
        for (double k : {0.5, 1.7, 3.0}) {
            const auto c = gue::cov_phase(n, k, k, pol);
            worst = std::max({worst, std::abs(c.value.real() - gue::sbar(n, k, pol).value), std::abs(c.value.imag())});
        }
    }
    t.check("cov_phase_diagonal_equals_sbar", worst, 1e-8);

    worst = 0.0;
    for (double k : {0.3, 1.0, 2.5, 4.0}) worst = std::max(worst, std::abs(gue::sbar(1, k, pol).value - (1.0 - std::exp(-k * k / 2))));
    t.check("sbar_single_level_closed_form", worst, 1e-10);

    worst = 0.0;
    for (int n : {1, 3, 6}) {
        for (double k : {0.0, 0.8, 2.1}) {
            worst = std::max(worst, std::abs(gue::half_line_transform(n, k, pol).value - gue::mean_form_factor(n, k)));
        }
    }
    t.check("half_line_transform_equals_mean", worst, 1e-7);

    worst = 0.0;
    for (int n : {2, 5, 9}) {
        worst = std::max({worst, gue::diff_identity_residual(n, 0.4, -0.9), gue::diff_identity_residual(n, 1.3, 0.2),
                          gue::diagonal_identity_residual(n, 0.7), gue::diagonal_identity_residual(n, 1.9)});
    }
    t.check("kernel_derivative_identities", worst, 1e-7);

    bool moments = true;
    for (int n = 1; n <= 6; ++n) {
        for (int p = 0; p <= 4; ++p) moments = moments && gue::moments_2p(n, p) == gue::moments_2p_hypergeometric(n, p);
    }
    t.flag("moments_recurrence_equals_hypergeometric", moments);

    bool zero = true;
    for (int n : {1, 4, 10}) zero = zero && gue::sbar(n, 0.0, pol).value == 0.0;
    t.flag("connected_vanishes_at_zero", zero);
}

void limits(Suite& t) {
    const auto pol = t.s.policy();
    const std::vector<double> ns = {8, 16, 32, 64};
    auto slope = [&](const std::function<double(int)>& err) {
        std::vector<double> e;
        for (double n : ns) e.push_back(std::abs(err(static_cast<int>(n))));
        return gue::log_log_slope(ns, e);
    };
    const double tau = 1.3;
    t.range("global_mean_rate", slope([&](int n) { return gue::global_mean_finite(n, tau) - gue::global_mean_limit(tau); }),
            -2.3, -1.7);
    t.range("global_connected_rate",
            slope([&](int n) { return gue::global_sbar_finite(n, tau, pol) - gue::global_sbar_limit(tau); }), -2.3, -1.7);
    t.range("global_covariance_rate",
            slope([&](int n) { return gue::global_cov_finite(n, 1.5, 2.5, pol) - gue::global_cov_limit(1.5, 2.5); }),
            -2.3, -1.7);

    // The ramp error oscillates in N at fixed tau; its supremum over tau is the
    // quantity with a clean 1/N rate.
    t.range("bulk_ramp_uniform_rate", slope([&](int n) { return gue::bulk_ramp_uniform_error(n, pol); }), -1.3, -0.7);
    t.info("bulk_ramp_pointwise_rate_at_half",
           slope([&](int n) { return gue::bulk_ramp_finite(n, 0.5, pol) - gue::bulk_ramp_limit(0.5); }));

    double worst = 0.0;
    for (double g : {0.5, 1.0, 2.0}) worst = std::max(worst, std::abs(gue::soft_mean_limit(g) - gue::soft_mean_quadrature(g, pol).value));
    t.check("soft_mean_vs_airy_quadrature", worst, 1e-7);
    worst = 0.0;
    for (auto [g1, g2] : {std::pair{1.0, 1.0}, std::pair{0.7, 1.3}, std::pair{2.0, 0.5}}) {
        worst = std::max(worst, std::abs(gue::soft_cov_limit(g1, g2) - gue::soft_cov_quadrature(g1, g2).value));
    }
    t.check("soft_covariance_vs_airy_quadrature", worst, 1e-7);

    double prev = INFINITY;
    bool monotone = true;
    for (int n : {200, 400, 800}) {
        const double e = std::abs(gue::soft_mean_finite(n, 1.0) - gue::soft_mean_limit(1.0));
        monotone = monotone && e < prev;
        prev = e;
    }
    t.flag("soft_mean_monotone_approach", monotone);
}

void ode_residuals(Suite& t) {
    const std::vector<double> xs = {0.0, 0.3, 0.77, 1.2, 1.9, 2.5, 3.3, 4.1, 4.6, 5.1};
    auto worst_on = [&](const DiffOperator& op, const std::function<gue::Jet(double, std::size_t)>& f,
                        const std::vector<double>& pts) {
        gue::OdeResidual w;
        for (double x : pts) {
            const auto r = gue::ode_residual(op, x, f(x, static_cast<std::size_t>(op.order())));
            w.absolute = std::max(w.absolute, r.absolute);
            w.relative = std::max(w.relative, r.relative);
        }
        return w;
    };
    const auto op2 = ode::circular_bulk_operator(2);
    const auto op4 = ode::circular_bulk_operator(4);
    auto report = [&](const std::string& name, const gue::OdeResidual& r, double limit) {
        t.check(name + "_absolute", r.absolute, limit);
        t.check(name + "_relative", r.relative, limit);
    };
    report("beta2_operator_on_closed_form", worst_on(op2, [](double x, std::size_t o) { return gue::rho2_jet(2, x, o); }, xs), 1e-8);
    report("beta4_operator_on_closed_form", worst_on(op4, [](double x, std::size_t o) { return gue::rho2_jet(4, x, o); }, xs), 1e-8);
    report("beta4_operator_on_beta1_companion", worst_on(op4, gue::beta1_companion_jet, xs), 1e-8);

    const auto fourier = ode::fourier_side(op4);
    report("beta4_fourier_operator_on_structure_function",
           worst_on(fourier, [](double k, std::size_t o) { return gue::structure_function_jet(4, k, o); },
                    {0.5, 1.0, 2.2, 3.9, 5.5, 7.0, 8.4, 9.6, 11.0, 12.3}),
           1e-7);
}

}  // namespace

int verify(const Settings& s, const VerifyArgs& a) {
    json out = json::object();
    bool ok = true;
    auto run = [&](const std::string& name, void (*body)(Suite&)) {
        if (a.suite != "all" && a.suite != name) return;
        Suite t{s};
        body(t);
        out[name] = {{"checks", t.checks}, {"pass", t.ok}};
        ok = ok && t.ok;
    };
    run("identities", identities);
    run("limits", limits);
    run("ode-residuals", ode_residuals);
    emit_json(s, {{"suites", out}, {"pass", ok}});
    return ok ? kOk : kFailed;
}

}  // namespace cli
