#include "rmtsf/version.hpp"

#include <Eigen/Core>
#include <boost/version.hpp>
#include <gmp.h>
#include <gsl/gsl_version.h>
#include <nlohmann/json.hpp>

namespace rmtsf {

std::map<std::string, std::string> build_info() {
    auto num = [](int v) { return std::to_string(v); };
    return {
        {"rmtsf", kVersion},
        {"gmp", gmp_version},
        {"gsl", GSL_VERSION},
        {"boost", num(BOOST_VERSION / 100000) + "." + num(BOOST_VERSION / 100 % 1000) + "." + num(BOOST_VERSION % 100)},
        {"eigen", num(EIGEN_WORLD_VERSION) + "." + num(EIGEN_MAJOR_VERSION) + "." + num(EIGEN_MINOR_VERSION)},
        {"nlohmann_json", num(NLOHMANN_JSON_VERSION_MAJOR) + "." + num(NLOHMANN_JSON_VERSION_MINOR) + "." +
                              num(NLOHMANN_JSON_VERSION_PATCH)},
    };
}

}  // namespace rmtsf
