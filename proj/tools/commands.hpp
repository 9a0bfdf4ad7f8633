#pragma once

#include "output.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cli {

struct DeriveOdeArgs {
    int beta = 2;
    bool finite_n = false;
    bool fourier = false;
    bool check = false;
};

struct SeriesArgs {
    int beta = 2;
    std::string at = "zero";
    std::optional<std::string> exponent;
    int terms = 6;
};

struct StructureArgs {
    int order = 10;
    std::optional<std::string> beta;
    bool check_zeros = false;
};

struct SffArgs {
    int n = 4;
    double kmax = 10.0;
    int points = 200;
    std::string format = "csv";
};

struct ScalingArgs {
    std::string regime = "global";
    std::vector<int> ns;
    std::optional<double> tau;
    std::optional<double> gamma;
};

struct VerifyArgs {
    std::string suite = "all";
};

int derive_ode(const Settings& s, const DeriveOdeArgs& a);
int series(const Settings& s, const SeriesArgs& a);
int structure_coeff(const Settings& s, const StructureArgs& a);
int sff(const Settings& s, const SffArgs& a);
int scaling(const Settings& s, const ScalingArgs& a);
int verify(const Settings& s, const VerifyArgs& a);

}  // namespace cli
