#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "harmonic/harmonic_function.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// {"num": "...", "den": "..."} with decimal strings, so consumers never
/// hit integer-width limits.
nlohmann::json fraction_json(const Rational& value);
Rational fraction_from_json(const nlohmann::json& value);

/// Instance as a JSON array of exact "p/q" strings.
nlohmann::json instance_json(const KnapsackInstance& instance);
std::string instance_to_json(const KnapsackInstance& instance);

/// Inverse of instance_to_json. Elements may be "p/q", integer or decimal
/// strings, or JSON integers. Throws std::invalid_argument on anything else.
KnapsackInstance instance_from_json(std::string_view text);
KnapsackInstance instance_from_json_value(const nlohmann::json& array);

}  // namespace harmonic
