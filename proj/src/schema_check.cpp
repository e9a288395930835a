#include "hyperbc/schema_check.hpp"

namespace hyperbc {

namespace {

using njson = nlohmann::json;

bool type_matches(const std::string& type, const njson& doc) {
    if (type == "object") return doc.is_object();
    if (type == "array") return doc.is_array();
    if (type == "string") return doc.is_string();
    if (type == "number") return doc.is_number();
    if (type == "integer") return doc.is_number_integer();
    if (type == "boolean") return doc.is_boolean();
    if (type == "null") return doc.is_null();
    return false;
}

void check(const njson& schema, const njson& doc, const std::string& path,
           std::vector<std::string>& out) {
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& sub : schema.at("oneOf")) {
            std::vector<std::string> local;
            check(sub, doc, path, local);
            if (local.empty()) ++hits;
        }
        if (hits != 1) {
            out.push_back(path + ": matches " + std::to_string(hits) +
                          " oneOf alternatives instead of exactly one");
            return;
        }
    }

    if (schema.contains("type")) {
        const njson& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), doc);
        } else {
            for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), doc);
        }
        if (!ok) {
            out.push_back(path + ": unexpected type " + std::string(doc.type_name()));
            return;
        }
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema.at("enum")) ok = ok || v == doc;
        if (!ok) out.push_back(path + ": value not in enum");
    }

    if (doc.is_object()) {
        const njson props = schema.value("properties", njson::object());
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!doc.contains(key.get<std::string>()))
                    out.push_back(path + ": missing required key '" + key.get<std::string>() +
                                  "'");
        if (schema.value("additionalProperties", njson(true)) == njson(false))
            for (const auto& [key, value] : doc.items())
                if (!props.contains(key))
                    out.push_back(path + ": unexpected key '" + key + "'");
        for (const auto& [key, sub] : props.items())
            if (doc.contains(key)) check(sub, doc.at(key), path + "/" + key, out);
    }

    if (doc.is_array()) {
        if (schema.contains("minItems") &&
            doc.size() < schema.at("minItems").get<std::size_t>())
            out.push_back(path + ": fewer than minItems elements");
        if (schema.contains("maxItems") &&
            doc.size() > schema.at("maxItems").get<std::size_t>())
            out.push_back(path + ": more than maxItems elements");
        if (schema.contains("items")) {
            const njson& items = schema.at("items");
            for (std::size_t i = 0; i < doc.size(); ++i)
                check(items, doc[i], path + "/" + std::to_string(i), out);
        }
    }

    if (doc.is_number()) {
        double x = doc.get<double>();
        if (schema.contains("minimum") && x < schema.at("minimum").get<double>())
            out.push_back(path + ": below minimum");
        if (schema.contains("exclusiveMinimum") &&
            x <= schema.at("exclusiveMinimum").get<double>())
            out.push_back(path + ": not above exclusiveMinimum");
        if (schema.contains("maximum") && x > schema.at("maximum").get<double>())
            out.push_back(path + ": above maximum");
    }
}

}  // namespace

std::vector<std::string> schema_violations(const njson& schema, const njson& doc) {
    std::vector<std::string> out;
    check(schema, doc, "#", out);
    return out;
}

}  // namespace hyperbc
