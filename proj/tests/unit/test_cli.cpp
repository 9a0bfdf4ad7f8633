#include <nlohmann/json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(RMTSF_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    const fs::path d = fs::temp_directory_path() / ("rmtsf_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("version and usage errors") {
    const auto v = run("--version");
    CHECK(v.code == 0);
    CHECK(v.out.find("0.1.0") != std::string::npos);
    CHECK(run("").code == 2);
    CHECK(run("derive-ode --beta 3").code == 2);
    CHECK(run("derive-ode --beta 2 --bogus").code == 2);
    CHECK(run("derive-ode --beta 2 --finite-N --fourier").code == 2);
    CHECK(run("series --beta 6 --at middle").code == 2);
    CHECK(run("--precision 40 derive-ode --beta 2").code == 2);
    CHECK(run("derive-ode --help").code == 0);
}

TEST_CASE("derive-ode") {
    const auto r = run("derive-ode --beta 2");
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["beta"] == 2);
    CHECK(j["order"] == 3);
    CHECK(j["operator"]["text"].is_string());
    CHECK(json::parse(j["operator"]["canonical"].get<std::string>()).is_object());
    CHECK(j["manifest"]["command"] == "derive-ode");
    CHECK(j["manifest"]["versions"].contains("gmp"));
    CHECK(j["manifest"]["versions"]["rmtsf"] == "0.1.0");

    const auto six = run("derive-ode --beta 6 --check-paper");
    CHECK(six.code == 0);
    const auto c = json::parse(six.out)["reference_check"];
    CHECK(c["match"] == true);
    CHECK(c["matches_recorded"] == false);
    CHECK(c["errata"].size() == 1);

    const auto f = run("derive-ode --beta 4 --fourier --check-paper");
    CHECK(f.code == 0);
    CHECK(json::parse(f.out)["kind"] == "fourier");
}

TEST_CASE("series") {
    const auto z = run("series --beta 6 --at zero");
    REQUIRE(z.code == 0);
    const auto roots = json::parse(z.out)["root_list"];
    CHECK(roots.size() == 7);
    CHECK(roots[0] == "-7/3");

    const auto f = run("series --beta 6 --at zero --exponent 2/3 --terms 3");
    REQUIRE(f.code == 0);
    CHECK(run("series --beta 6 --at zero --exponent -7/3").code == 2);
    CHECK(run("series --beta 6 --at zero --exponent 5").code == 2);

    const auto inf = run("series --beta 6 --at infinity --terms 2");
    REQUIRE(inf.code == 0);
    const auto j = json::parse(inf.out);
    CHECK(j["c"][1]["text"] == "-1/6*pi^-2");
    CHECK(j["oscillatory"].size() == 3);
}

TEST_CASE("structure-coeff") {
    const auto r = run("structure-coeff --order 10 --check-zeros");
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.dump().find("-1523/420") != std::string::npos);
    CHECK(run("structure-coeff --order 8 --beta 4").code == 0);
    CHECK(run("structure-coeff --order 8 --beta 0").code == 2);
}

TEST_CASE("sff output") {
    const auto r = run("sff --n 4 --kmax 3 --points 4");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,tau_g,tau_b,connected,disconnected,error");
    int rows = 0;
    std::string first;
    while (std::getline(in, line)) {
        if (rows == 0) first = line;
        ++rows;
    }
    CHECK(rows == 4);
    CHECK(first.rfind("0,0,0,0,16,", 0) == 0);

    const auto js = run("sff --n 3 --kmax 2 --points 3 --out json");
    REQUIRE(js.code == 0);
    const auto j = json::parse(js.out);
    CHECK(j["data"].size() == 3);
    CHECK(j["columns"].size() == 6);
    CHECK(run("sff --n 0 --kmax 2").code == 2);
}

TEST_CASE("precision") {
    // tau_g = sqrt(6) at k = 1
    const auto r = run("--precision 4 sff --n 3 --kmax 1 --points 2");
    REQUIRE(r.code == 0);
    CHECK(r.out.find(",2.449,") != std::string::npos);
    CHECK(r.out.find("2.4494") == std::string::npos);
}

TEST_CASE("manifests replay to identical output") {
    const fs::path d = scratch();
    const auto a = d / "a.csv";
    const auto b = d / "b.csv";
    REQUIRE(run("--precision 9 sff --n 5 --kmax 4 --points 9 -o " + a.string()).code == 0);
    REQUIRE(fs::exists(a.string() + ".manifest.json"));
    const auto m = json::parse(slurp(a.string() + ".manifest.json"));
    CHECK(m["precision"] == 9);
    REQUIRE(run("--replay " + a.string() + ".manifest.json -o " + b.string()).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a.string() + ".manifest.json") == slurp(b.string() + ".manifest.json"));

    const auto x = d / "x.json";
    const auto y = d / "y.json";
    REQUIRE(run("structure-coeff --order 8 --beta 6 -o " + x.string()).code == 0);
    REQUIRE(run("--replay " + x.string() + " -o " + y.string()).code == 0);
    CHECK(slurp(x) == slurp(y));
    CHECK(run("--replay " + (d / "missing.json").string()).code != 0);
    fs::remove_all(d);
}

TEST_CASE("verify") {
    const auto r = run("verify --suite identities");
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["suites"]["identities"]["pass"] == true);
}
