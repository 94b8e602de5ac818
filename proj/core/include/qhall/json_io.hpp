#pragma once

// JSON wire formats. Header-only on purpose: only consumers that serialize
// (the CLI, some tests) need nlohmann/json on their include path.

#include "qhall/hl.hpp"
#include "qhall/laurent.hpp"
#include "qhall/partition.hpp"
#include "qhall/stats.hpp"

#include <json.hpp>

namespace qhall {

inline nlohmann::json to_json(const Partition& p) {
    nlohmann::json a = nlohmann::json::array();
    for (int x : p) a.push_back(x);
    return a;
}

inline nlohmann::json to_json(const Composition& c) {
    nlohmann::json a = nlohmann::json::array();
    for (int x : c) a.push_back(x);
    return a;
}

// {"var": "t", "coeffs": {"<exponent>": "<integer as string>"}}
inline nlohmann::json to_json(const LaurentPoly& p, const std::string& var = "t") {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [e, v] : p.coeffs()) coeffs[std::to_string(e)] = v.str();
    return nlohmann::json{{"var", var}, {"coeffs", coeffs}};
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (const auto& [k, v] : j.at("coeffs").items())
        p.add_term(std::stol(k), Int(v.get<std::string>()));
    return p;
}

// expansions: map "3,2,1" -> polynomial object
inline nlohmann::json to_json(const ExpansionMap& m, const std::string& var = "t") {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [p, c] : m) o[p.to_string()] = to_json(c, var);
    return o;
}

// SSYT as array of row arrays; skew shapes as {"outer": [...], "inner": [...]}
inline nlohmann::json to_json(const SSYT& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) rows.push_back(r);
    if (t.shape.is_straight()) return rows;
    return nlohmann::json{{"outer", to_json(t.shape.outer)},
                          {"inner", to_json(t.shape.inner)},
                          {"rows", rows}};
}

inline nlohmann::json to_json(const Tabloid& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) rows.push_back(r);
    return rows;
}

}  // namespace qhall
