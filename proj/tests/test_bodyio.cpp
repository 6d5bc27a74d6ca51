#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spherloc/bodyio.hpp"

using namespace spherloc;
using nlohmann::json;

TEST_CASE("load bodies from json") {
    const ConvexBody2D disk = body_from_json(json{{"type", "disk"}, {"radius", 1.5}});
    CHECK(disk.as_disk().radius == doctest::Approx(1.5));

    const ConvexBody2D strip =
        body_from_json(json{{"type", "strip"}, {"normal_angle", 0.4}, {"half_width", 0.9}});
    CHECK(strip.as_strip().half_width == doctest::Approx(0.9));

    // half vertex list is completed and ordered
    const ConvexBody2D square =
        body_from_json(json{{"type", "polygon"}, {"vertices", {{1.0, 1.0}, {-1.0, 1.0}}}});
    REQUIRE(square.is_polygon());
    CHECK(square.as_polygon().vertices.size() == 4);
    CHECK(square.radial(0.0) == doctest::Approx(1.0));

    const ConvexBody2D inter = body_from_json(
        json{{"type", "intersection"},
             {"bodies",
              {json{{"type", "disk"}, {"radius", 2.0}}, json{{"type", "disk"}, {"radius", 1.0}}}}});
    CHECK(inter.radial(0.3) == doctest::Approx(1.0));
}

TEST_CASE("loader diagnostics") {
    CHECK_THROWS_AS(body_from_json(json{{"type", "frisbee"}}), ValidationError);
    CHECK_THROWS_AS(body_from_json(json{{"type", "disk"}}), ValidationError);
    CHECK_THROWS_AS(body_from_json(json::array()), ValidationError);
    CHECK_THROWS_AS(body_from_json(json{{"type", "polygon"}, {"vertices", json::array()}}),
                    ValidationError);
    // vertex that is not a pair
    CHECK_THROWS_WITH_AS(
        body_from_json(json{{"type", "polygon"}, {"vertices", {{1.0, 1.0}, {2.0}}}}),
        doctest::Contains("vertex 1"), ValidationError);
    // both halves listed
    CHECK_THROWS_WITH_AS(
        body_from_json(json{{"type", "polygon"}, {"vertices", {{1.0, 1.0}, {-1.0, -1.0}}}}),
        doctest::Contains("one half"), ValidationError);
    // collinear completion
    CHECK_THROWS_AS(body_from_json(json{{"type", "polygon"},
                                        {"vertices", {{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {-1.0, 1.0}}}}),
                    ValidationError);
}

TEST_CASE("body json round trip preserves the radial function") {
    const json half_hex{{"type", "polygon"},
                        {"vertices", {{1.2, 0.1}, {0.7, 1.0}, {-0.6, 1.1}}}};
    const ConvexBody2D body = body_from_json(half_hex);
    const ConvexBody2D again = body_from_json(json::parse(body_to_json(body).dump()));
    for (int i = 0; i < 64; ++i) {
        const double t = 2.0 * std::numbers::pi * i / 64.0;
        CHECK(again.radial(t) == doctest::Approx(body.radial(t)).epsilon(1e-12));
    }
    CHECK(body_to_json(body)["vertices"].size() == 3);
}
