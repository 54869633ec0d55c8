#pragma once

// Small JSON-schema checker covering the subset the shipped schema uses:
// type (string or list), enum, properties/required/additionalProperties,
// items, minItems.

#include <json.hpp>

#include <string>

namespace schema_check {

inline bool type_matches(const std::string& type, const nlohmann::json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    return false;
}

inline bool validate(const nlohmann::json& schema, const nlohmann::json& value, std::string& err,
                     const std::string& path = "$") {
    if (schema.contains("type")) {
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), value);
        } else {
            for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
        }
        if (!ok) {
            err = path + ": type mismatch";
            return false;
        }
        // a null alternative short-circuits the object keywords
        if (value.is_null()) return true;
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || alt == value;
        if (!ok) {
            err = path + ": not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"]) {
                if (!value.contains(key.get<std::string>())) {
                    err = path + ": missing required key '" + key.get<std::string>() + "'";
                    return false;
                }
            }
        }
        const nlohmann::json* props =
            schema.contains("properties") ? &schema["properties"] : nullptr;
        bool extra_ok = true;
        if (schema.contains("additionalProperties"))
            extra_ok = schema["additionalProperties"].get<bool>();
        for (const auto& [key, sub] : value.items()) {
            if (props && props->contains(key)) {
                if (!validate((*props)[key], sub, err, path + "." + key)) return false;
            } else if (!extra_ok) {
                err = path + ": unexpected key '" + key + "'";
                return false;
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") &&
            value.size() < schema["minItems"].get<std::size_t>()) {
            err = path + ": fewer than minItems elements";
            return false;
        }
        if (schema.contains("items")) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (!validate(schema["items"], value[i], err,
                              path + "[" + std::to_string(i) + "]"))
                    return false;
            }
        }
    }
    return true;
}

}  // namespace schema_check
