#pragma once

#include <json.hpp>

#include "krl/polynomial.hpp"

namespace krl {

// {"n": int, "terms": [{"bt": int, "bx": [int], "bv": [int], "c": "p/q" or number}]}
nlohmann::json to_json(const KineticPolynomial& p);
KineticPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace krl
