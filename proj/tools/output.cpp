#include "output.hpp"

#include "rmtsf/version.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace cli {

rmtsf::gue::AccuracyPolicy Settings::policy() const {
    rmtsf::gue::AccuracyPolicy p;
    p.abs_tol = tol;
    p.rel_tol = tol;
    return p;
}

json Settings::number(double v) const {
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(format(v).c_str(), nullptr);
}

std::string Settings::format(double v) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

json manifest(const Settings& s) {
    const auto policy = s.policy();
    return {
        {"command", s.command},
        {"argv", s.argv},
        {"inputs", s.inputs},
        {"precision", s.precision},
        {"tolerance", {{"abs", policy.abs_tol}, {"rel", policy.rel_tol}, {"cross_check", policy.cross_check}}},
        {"versions", rmtsf::build_info()},
    };
}

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

}  // namespace

void emit_json(const Settings& s, json result) {
    result["manifest"] = manifest(s);
    write_text(s.output, result.dump(2) + "\n");
}

void emit_csv(const Settings& s, const std::string& csv) {
    write_text(s.output, csv);
    const std::string m = manifest(s).dump(2) + "\n";
    if (s.output.empty()) {
        std::cerr << m;
    } else {
        write_text(s.output + ".manifest.json", m);
    }
}

}  // namespace cli
