#include "commands.hpp"
#include "output.hpp"

#include "rmtsf/gue/quadrature.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>

namespace {

using cli::json;

json read_manifest(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--replay", "cannot read " + path);
    json doc = json::parse(f, nullptr, false);
    if (doc.is_discarded()) throw CLI::ValidationError("--replay", path + " is not JSON");
    if (doc.contains("manifest")) doc = doc["manifest"];
    if (!doc.contains("argv") || !doc["argv"].is_array()) {
        throw CLI::ValidationError("--replay", path + " has no argv list");
    }
    return doc;
}

// Options of the chosen subcommand that were given on the command line.
json given_inputs(const CLI::App* sub) {
    json in = json::object();
    for (const CLI::Option* o : sub->get_options()) {
        if (o->count() == 0 || o->get_name() == "--help") continue;
        const auto& r = o->results();
        if (r.empty() || o->get_expected_max() == 0) {
            in[o->get_name()] = true;
        } else if (r.size() == 1) {
            in[o->get_name()] = r.front();
        } else {
            in[o->get_name()] = r;
        }
    }
    return in;
}

// The command line minus the output destination, which is not an input.
std::vector<std::string> recorded_args(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "-o" || a == "--output") {
            ++i;
        } else if (a.rfind("--output=", 0) != 0) {
            out.push_back(a);
        }
    }
    return out;
}

int run(std::vector<std::string> args, bool replayed) {
    CLI::App app{"Exact and numerical tools for eigenvalue correlation functions and spectral form factors", "rmtsf"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    cli::Settings s;
    std::string replay;
    app.add_option("--precision", s.precision, "Significant digits of numeric output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--tol", s.tol, "Absolute and relative quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("-o,--output", s.output, "Output file (default: stdout)");
    if (!replayed) app.add_option("--replay", replay, "Re-run the command recorded in a manifest");
    app.set_version_flag("--version", "rmtsf 0.1.0");

    cli::DeriveOdeArgs dode;
    auto* c_ode = app.add_subcommand("derive-ode", "Derive the differential operator of the two-point function");
    c_ode->add_option("--beta", dode.beta, "Even positive Dyson index")->required();
    c_ode->add_flag("--finite-N", dode.finite_n, "Keep the finite-N operator in z");
    c_ode->add_flag("--fourier", dode.fourier, "Transfer the bulk operator to the Fourier variable");
    c_ode->add_flag("--check-paper", dode.check, "Compare with the stored reference operator");

    cli::SeriesArgs ser;
    auto* c_ser = app.add_subcommand("series", "Local series solutions of the bulk operator");
    c_ser->add_option("--beta", ser.beta, "Even positive Dyson index")->required();
    c_ser->add_option("--at", ser.at, "Expansion point")->check(CLI::IsMember({"zero", "infinity"}))->required();
    c_ser->add_option("--exponent", ser.exponent, "Frobenius exponent (rational, e.g. -7/3)");
    c_ser->add_option("--terms", ser.terms, "Number of coefficients")->check(CLI::Range(1, 64))->capture_default_str();

    cli::StructureArgs st;
    auto* c_st = app.add_subcommand("structure-coeff", "Small-k structure-function coefficients");
    c_st->add_option("--order", st.order, "Power of k")->check(CLI::IsMember({8, 10}))->capture_default_str();
    c_st->add_option("--beta", st.beta, "Evaluate at this beta (rational)");
    c_st->add_flag("--check-zeros", st.check_zeros, "Check that the factor's zeros lie on the unit circle");

    cli::SffArgs sf;
    auto* c_sff = app.add_subcommand("sff", "Spectral form factor curve of the GUE");
    c_sff->add_option("--n", sf.n, "Matrix size")->check(CLI::Range(1, 4096))->required();
    c_sff->add_option("--kmax", sf.kmax, "Largest k")->check(CLI::NonNegativeNumber)->required();
    c_sff->add_option("--points", sf.points, "Grid points, k = 0 included")->check(CLI::Range(2, 1000000))->capture_default_str();
    c_sff->add_option("--out", sf.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    cli::ScalingArgs sc;
    auto* c_sc = app.add_subcommand("scaling", "Finite-N convergence to the scaling limits");
    c_sc->add_option("--regime", sc.regime, "Scaling regime")->check(CLI::IsMember({"global", "bulk", "soft"}))->required();
    c_sc->add_option("--ns", sc.ns, "Matrix sizes")->delimiter(',')->check(CLI::Range(1, 100000));
    c_sc->add_option("--tau", sc.tau, "Scaled time");
    c_sc->add_option("--gamma", sc.gamma, "Damping (bulk) or soft-edge variable")->check(CLI::NonNegativeNumber);

    cli::VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "Run a verification suite; exit 1 on any failure");
    c_ver->add_option("--suite", ver.suite, "Suite")
        ->check(CLI::IsMember({"identities", "limits", "ode-residuals", "all"}))
        ->capture_default_str();

    std::vector<std::string> pending(args.rbegin(), args.rend());  // CLI11 consumes a reversed vector
    try {
        app.parse(pending);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kUsage;
    }

    if (!replay.empty()) {
        if (!recorded_args(args).empty() && recorded_args(args).size() != 2) {
            std::cerr << "--replay takes only --output\n";
            return cli::kUsage;
        }
        json m;
        try {
            m = read_manifest(replay);
        } catch (const CLI::Error& e) {
            std::cerr << e.what() << "\n";
            return cli::kUsage;
        }
        auto again = m["argv"].get<std::vector<std::string>>();
        if (!s.output.empty()) again.insert(again.begin(), {"--output", s.output});
        return run(std::move(again), true);
    }

    const std::vector<std::pair<CLI::App*, std::function<int()>>> dispatch = {
        {c_ode, [&] { return cli::derive_ode(s, dode); }},
        {c_ser, [&] { return cli::series(s, ser); }},
        {c_st, [&] { return cli::structure_coeff(s, st); }},
        {c_sff, [&] { return cli::sff(s, sf); }},
        {c_sc, [&] { return cli::scaling(s, sc); }},
        {c_ver, [&] { return cli::verify(s, ver); }},
    };
    for (const auto& [sub, body] : dispatch) {
        if (!sub->parsed()) continue;
        s.argv = recorded_args(args);
        s.command = sub->get_name();
        s.inputs = given_inputs(sub);
        try {
            return body();
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return cli::kUsage;
        } catch (const std::domain_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return cli::kUsage;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return cli::kFailed;
        }
    }
    std::cerr << app.help();
    return cli::kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(std::vector<std::string>(argv + 1, argv + argc), false);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kFailed;
    }
}
