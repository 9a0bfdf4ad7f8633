#pragma once

// Canonical JSON for exact objects. Output is compact with sorted keys, so
// equal values always serialize to identical bytes and parse(dump(x)) == x.
//
// A term is [exponents, num, den] for a real coefficient and
// [exponents, num, den, im_num, im_den] otherwise; exponents follow the
// "vars" header (X, k, z, pi, N). Numbers are decimal strings.

#include "rmtsf/algebra/diff_operator.hpp"
#include "rmtsf/algebra/formal_series.hpp"
#include "rmtsf/algebra/pi_laurent.hpp"
#include "rmtsf/algebra/poly.hpp"

#include <string>
#include <string_view>

namespace rmtsf {

std::string to_json(const Poly& p);
std::string to_json(const PiLaurent& v);
std::string to_json(const DiffOperator& op);
std::string to_json(const FormalSeries& s);

Poly poly_from_json(std::string_view text);
PiLaurent pi_laurent_from_json(std::string_view text);
DiffOperator diff_operator_from_json(std::string_view text);
FormalSeries formal_series_from_json(std::string_view text);

}  // namespace rmtsf
