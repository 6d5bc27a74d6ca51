#pragma once

#include <string>

#include <json.hpp>

#include "spherloc/convex2d.hpp"

namespace spherloc {

/// Body-definition schema: {"type": "polygon"|"disk"|"strip"|"intersection", ...}.
/// Polygon files list one half of the vertex set; the loader completes the
/// symmetric partners, orders them, and validates convexity and symmetry.
/// Throws ValidationError with a field-level diagnostic on bad input.
ConvexBody2D body_from_json(const nlohmann::json& j);

ConvexBody2D load_body_file(const std::string& path);

/// Loader-compatible description of a body (polygons emit one half of the
/// vertex set, matching the file schema).
nlohmann::json body_to_json(const ConvexBody2D& body);

} // namespace spherloc
