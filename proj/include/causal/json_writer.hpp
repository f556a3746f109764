#pragma once

#include "causal/rational.hpp"
#include "causal/special_functions.hpp"

#include "json.hpp"

#include <string>

namespace causal {

/// Deterministic serialization: keys in insertion order, floats with 17
/// significant digits ("%.17g", C locale), non-finite floats as null.
std::string write_json(const nlohmann::ordered_json& value, int indent = -1);

/// {"status", "log_value", "value"}; log_value is log|v| and null unless the
/// status is finite and v != 0; value is null unless finite and representable.
nlohmann::ordered_json eval_json(const EvalResult& r);

nlohmann::ordered_json rational_vector_json(const RationalVector& v);
nlohmann::ordered_json double_vector_json(std::span<const double> v);

}  // namespace causal
