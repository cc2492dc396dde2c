#pragma once

// Minimal structural validator for the shipped schemas: supports type,
// required, properties, items and additionalProperties — exactly the
// vocabulary the schema files use.

#include <fstream>
#include <json.hpp>
#include <string>

namespace schema_util {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validate(const nlohmann::json& value, const nlohmann::json& schema, std::string* why) {
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const auto& option : t)
        if (type_matches(value, option.get<std::string>())) ok = true;
    }
    if (!ok) {
      if (why) *why = "type mismatch: " + value.dump().substr(0, 80) + " vs " + t.dump();
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          if (why) *why = "missing required key " + key.get<std::string>();
          return false;
        }
      }
    }
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (schema.contains("properties") && schema["properties"].contains(it.key())) {
        if (!validate(it.value(), schema["properties"][it.key()], why)) return false;
      } else if (schema.contains("additionalProperties")) {
        if (!validate(it.value(), schema["additionalProperties"], why)) return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (const auto& item : value)
      if (!validate(item, schema["items"], why)) return false;
  }
  return true;
}

inline nlohmann::json load_schema(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open schema " + path);
  return nlohmann::json::parse(f);
}

}  // namespace schema_util
