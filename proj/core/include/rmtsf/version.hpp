#pragma once

#include <map>
#include <string>

namespace rmtsf {

inline constexpr const char* kVersion = "0.1.0";

/// Library name to version string for rmtsf and the libraries it was built against.
std::map<std::string, std::string> build_info();

}  // namespace rmtsf
