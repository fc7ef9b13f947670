#include <stdexcept>
#include <string>

#include <json.hpp>

#include "aspectsearch/profile.hpp"
#include "aspectsearch/strategy.hpp"

namespace aspectsearch {

namespace {

nlohmann::json parse_or_fail(const std::string& text, const char* what) {
  auto parsed = nlohmann::json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw std::invalid_argument(std::string(what) + ": malformed JSON");
  }
  return parsed;
}

}  // namespace

DetectionProfile profile_from_json(const std::string& text) {
  const auto doc = parse_or_fail(text, "profile descriptor");
  if (!doc.is_object() || !doc.contains("type") ||
      !doc["type"].is_string()) {
    throw std::invalid_argument(
        "profile descriptor: expected {\"type\":\"sin2\"} or "
        "{\"type\":\"cosine\",\"coeffs\":[...]}");
  }
  const std::string type = doc["type"].get<std::string>();
  if (type == "sin2") {
    return DetectionProfile::sin2();
  }
  if (type == "cosine") {
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) {
      throw std::invalid_argument(
          "profile descriptor: cosine type needs a \"coeffs\" array");
    }
    std::vector<double> coeffs;
    for (const auto& c : doc["coeffs"]) {
      if (!c.is_number()) {
        throw std::invalid_argument(
            "profile descriptor: coeffs must be numbers");
      }
      coeffs.push_back(c.get<double>());
    }
    return DetectionProfile(std::move(coeffs));
  }
  throw std::invalid_argument("profile descriptor: unknown type \"" + type +
                              "\"");
}

StrategyDescriptor strategy_from_json(const std::string& text) {
  const auto doc = parse_or_fail(text, "strategy descriptor");
  StrategyDescriptor out;
  if (doc.is_object() && doc.contains("m") && doc.contains("n")) {
    if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer()) {
      throw std::invalid_argument("strategy descriptor: m and n must be "
                                  "integers");
    }
    out.has_strategy = true;
    out.spec = make_strategy(doc["m"].get<int>(), doc["n"].get<int>());
    return out;
  }
  if (doc.is_object() && doc.contains("angles") && doc["angles"].is_array()) {
    for (const auto& a : doc["angles"]) {
      if (!a.is_number()) {
        throw std::invalid_argument(
            "strategy descriptor: angles must be numbers (radians)");
      }
      out.angles.push_back(a.get<double>());
    }
    if (out.angles.empty()) {
      throw std::invalid_argument("strategy descriptor: angles array is "
                                  "empty");
    }
    return out;
  }
  throw std::invalid_argument(
      "strategy descriptor: expected {\"m\":...,\"n\":...} or "
      "{\"angles\":[...]}");
}

}  // namespace aspectsearch
