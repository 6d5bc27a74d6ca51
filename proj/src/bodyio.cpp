#include "spherloc/bodyio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace spherloc {

namespace {

double require_number(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw ValidationError(std::string("body: missing numeric field '") + field + "'");
    return j[field].get<double>();
}

ConvexBody2D polygon_from_half(const nlohmann::json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw ValidationError("polygon: missing 'vertices' array");
    std::vector<Vec2> points;
    points.reserve(2 * j["vertices"].size());
    std::size_t index = 0;
    for (const auto& item : j["vertices"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw ValidationError("polygon: vertex " + std::to_string(index) +
                                  " must be a pair [x, y]");
        points.push_back({item[0].get<double>(), item[1].get<double>()});
        ++index;
    }
    // One half only: a listed vertex must not already have its negation listed.
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t k = i + 1; k < points.size(); ++k)
            if ((points[i] + points[k]).norm() < 1e-9)
                throw ValidationError("polygon: vertices " + std::to_string(i) + " and " +
                                      std::to_string(k) +
                                      " are negations; list one half of the vertex set only");
    const std::size_t half = points.size();
    for (std::size_t i = 0; i < half; ++i) points.push_back(-points[i]);
    std::sort(points.begin(), points.end(),
              [](Vec2 a, Vec2 b) { return a.angle() < b.angle(); });
    return ConvexBody2D::polygon(std::move(points));
}

} // namespace

ConvexBody2D body_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ValidationError("body: expected an object with a string 'type'");
    const std::string type = j["type"].get<std::string>();
    if (type == "polygon") return polygon_from_half(j);
    if (type == "disk") return ConvexBody2D::disk(require_number(j, "radius"));
    if (type == "strip")
        return ConvexBody2D::strip(require_number(j, "normal_angle"),
                                   require_number(j, "half_width"));
    if (type == "intersection") {
        if (!j.contains("bodies") || !j["bodies"].is_array() || j["bodies"].empty())
            throw ValidationError("intersection: missing nonempty 'bodies' array");
        ConvexBody2D acc = ConvexBody2D::whole_plane();
        for (const auto& item : j["bodies"]) acc = intersect(std::move(acc), body_from_json(item));
        return acc;
    }
    if (type == "whole_plane") return ConvexBody2D::whole_plane();
    throw ValidationError("body: unknown type '" + type + "'");
}

ConvexBody2D load_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open body file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    try {
        return body_from_json(j);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

nlohmann::json body_to_json(const ConvexBody2D& body) {
    if (body.is_polygon()) {
        // Emit one half of the vertex set so the output loads back through
        // the symmetric completion.
        nlohmann::json verts = nlohmann::json::array();
        for (const Vec2& v : body.as_polygon().vertices)
            if (v.y > 0.0 || (v.y == 0.0 && v.x > 0.0)) verts.push_back({v.x, v.y});
        return {{"type", "polygon"}, {"vertices", verts}};
    }
    if (body.is_disk()) return {{"type", "disk"}, {"radius", body.as_disk().radius}};
    if (body.is_strip()) {
        const auto& s = body.as_strip();
        return {{"type", "strip"}, {"normal_angle", s.normal_angle}, {"half_width", s.half_width}};
    }
    if (body.is_intersection()) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& b : body.as_intersection().bodies) list.push_back(body_to_json(b));
        return {{"type", "intersection"}, {"bodies", list}};
    }
    return {{"type", "whole_plane"}};
}

} // namespace spherloc
