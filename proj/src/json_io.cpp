#include "harmonic/json_io.hpp"

#include <stdexcept>

namespace harmonic {

nlohmann::json fraction_json(const Rational& value) {
  return {{"num", value.num().to_string()}, {"den", value.den().to_string()}};
}

Rational fraction_from_json(const nlohmann::json& value) {
  if (!value.is_object() || !value.contains("num") || !value.contains("den") ||
      !value["num"].is_string() || !value["den"].is_string()) {
    throw std::invalid_argument("fraction must be {\"num\": string, \"den\": string}");
  }
  return Rational(BigInt::parse(value["num"].get<std::string>()),
                  BigInt::parse(value["den"].get<std::string>()));
}

nlohmann::json instance_json(const KnapsackInstance& instance) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& item : instance.items()) {
    out.push_back(item.num().to_string() + "/" + item.den().to_string());
  }
  return out;
}

std::string instance_to_json(const KnapsackInstance& instance) {
  return instance_json(instance).dump();
}

KnapsackInstance instance_from_json_value(const nlohmann::json& array) {
  if (!array.is_array()) throw std::invalid_argument("instance must be a JSON array");
  std::vector<Rational> items;
  items.reserve(array.size());
  for (const auto& element : array) {
    if (element.is_string()) {
      items.push_back(Rational::parse(element.get<std::string>()));
    } else if (element.is_number_integer()) {
      items.push_back(Rational(BigInt::parse(element.dump())));
    } else {
      throw std::invalid_argument("instance items must be strings like \"p/q\", got " +
                                  element.dump());
    }
  }
  return KnapsackInstance(std::move(items));
}

KnapsackInstance instance_from_json(std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
  return instance_from_json_value(parsed);
}

}  // namespace harmonic
