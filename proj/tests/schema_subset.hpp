#pragma once

// Minimal JSON-Schema subset interpreter used by the tests to validate
// documents against the shipped schema files: handles "type", "required",
// and recursive "properties".

#include <string>

#include "json.hpp"

namespace schema_subset {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  return false;
}

inline bool validate(const nlohmann::json& value, const nlohmann::json& schema,
                     std::string* error = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>()))
    return fail("type mismatch, expected " + schema["type"].get<std::string>());
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!value.contains(key.get<std::string>()))
        return fail("missing required key " + key.get<std::string>());
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (!value.contains(key)) continue;
      std::string suberr;
      if (!validate(value[key], sub, &suberr))
        return fail(key + ": " + suberr);
    }
  }
  return true;
}

}  // namespace schema_subset
