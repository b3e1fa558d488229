#pragma once

#include <json.hpp>

#include "hradon/matrix.hpp"

namespace hradon {

using json = nlohmann::json;

/// Shared wire schema: {"field":"R|C|H","rows":n,"cols":m,"entries":[...]}.
/// Rationals are "p/q" strings; a C entry is a [re, im] pair and an H entry
/// a [w, x, y, z] quadruple.
json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

}  // namespace hradon
