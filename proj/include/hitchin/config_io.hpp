#pragma once

// Particle-list ingestion.  Schema:
//   {"particles": [{"x": number, "y": number, "c": number}, ...]}
// "c" defaults to 1; if every c equals 1 the result is the smooth
// multi-particle family, otherwise the fractional family.

#include "hitchin/field_config.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hitchin {

inline FieldConfig<double> config_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("particles") || !doc["particles"].is_array())
        throw std::invalid_argument("particle config: expected {\"particles\": [...]}");
    std::vector<Particle> ps;
    bool fractional = false;
    for (const auto& item : doc["particles"]) {
        if (!item.is_object() || !item.contains("x") || !item.contains("y"))
            throw std::invalid_argument("particle config: each entry needs \"x\" and \"y\"");
        Particle p;
        p.x = item["x"].get<double>();
        p.y = item["y"].get<double>();
        p.c = item.value("c", 1.0);
        if (!(p.c > 0.0)) throw std::invalid_argument("particle config: c must be > 0");
        if (p.c != 1.0) fractional = true;
        ps.push_back(p);
    }
    if (ps.empty()) throw std::invalid_argument("particle config: need at least one particle");
    if (!fractional) {
        std::vector<std::array<double, 2>> centers;
        centers.reserve(ps.size());
        for (const auto& p : ps) centers.push_back({p.x, p.y});
        return FieldConfig<double>::multi(centers);
    }
    return FieldConfig<double>::fractional(ps);
}

inline FieldConfig<double> load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("particle config: cannot open " + path);
    nlohmann::json doc;
    in >> doc;
    return config_from_json(doc);
}

} // namespace hitchin
