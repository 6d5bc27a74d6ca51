#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "spherloc/errors.hpp"

namespace spherloc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double angle() const { return std::atan2(y, x); }
};

inline Vec2 unit_dir(double t) { return {std::cos(t), std::sin(t)}; }

/// Planar cone over the angular interval [t_lo, t_hi], 0 < t_hi - t_lo <= pi.
struct Cone2D {
    double t_lo;
    double t_hi;

    Cone2D(double lo, double hi);
    double length() const { return t_hi - t_lo; }
};

/// Origin-symmetric planar convex body. Bodies are immutable radial-function
/// oracles; intersections stay lazy (pointwise min of radials).
class ConvexBody2D {
public:
    struct Polygon {
        std::vector<Vec2> vertices;       // counterclockwise, closed under negation
        std::vector<Vec2> edge_normals;   // unit outward normal of edge i -> i+1
        std::vector<double> edge_offsets; // distance from origin to edge line
    };
    struct Disk {
        double radius;
    };
    struct Strip {
        double normal_angle;
        double half_width;
    };
    struct Intersection {
        std::vector<ConvexBody2D> bodies;
    };
    struct WholePlane {};

    static ConvexBody2D polygon(std::vector<Vec2> ccw_vertices);
    static ConvexBody2D disk(double radius);
    static ConvexBody2D strip(double normal_angle, double half_width);
    static ConvexBody2D whole_plane();

    /// Radial function sup{ r >= 0 : r*(cos t, sin t) in K }; may be +inf.
    double radial(double t) const;

    /// Support function max_{x in K} <x, (cos t, sin t)>. Throws Unbounded
    /// in directions where the body has infinite extent.
    double support(double t) const;

    bool bounded() const;

    /// Exact extremes of the radial function for polygons and disks;
    /// dense-grid estimates with local refinement for intersections.
    double min_radial() const;
    double max_radial() const;

    /// Short human-readable tag for reports.
    std::string describe() const;

    bool is_polygon() const { return std::holds_alternative<Polygon>(v_); }
    bool is_disk() const { return std::holds_alternative<Disk>(v_); }
    bool is_strip() const { return std::holds_alternative<Strip>(v_); }
    bool is_whole_plane() const { return std::holds_alternative<WholePlane>(v_); }
    bool is_intersection() const { return std::holds_alternative<Intersection>(v_); }

    const Polygon& as_polygon() const { return std::get<Polygon>(v_); }
    const Disk& as_disk() const { return std::get<Disk>(v_); }
    const Strip& as_strip() const { return std::get<Strip>(v_); }
    const Intersection& as_intersection() const { return std::get<Intersection>(v_); }

    friend ConvexBody2D intersect(ConvexBody2D a, ConvexBody2D b);

private:
    ConvexBody2D() = default;
    std::variant<Polygon, Disk, Strip, Intersection, WholePlane> v_;
};

/// Directions along which a body's radial function is infinite. Either the
/// full circle or a finite set of isolated angles (strip free directions).
struct UnboundedDirections {
    bool all = false;
    std::vector<double> angles; // each in [0, 2pi)

    bool empty() const { return !all && angles.empty(); }
    bool meets_arc(double t_lo, double t_hi) const;
};

UnboundedDirections unbounded_directions(const ConvexBody2D& body);

/// Polar dual K° = { y : <x,y> <= 1 for all x in K }. Polygons map exactly by
/// vertex/edge exchange; Disk(R) maps to Disk(1/R).
ConvexBody2D polar_dual(const ConvexBody2D& body);

/// Lazy intersection; whole-plane operands are absorbed, nested
/// intersections flattened.
ConvexBody2D intersect(ConvexBody2D a, ConvexBody2D b);

/// True iff inner_r < min radial (strict containment of the inner ball) and
/// max radial <= outer_R. Unbounded bodies fail for finite outer_R.
bool ball_sandwich_check(const ConvexBody2D& body, double inner_r, double outer_R);

enum class RefBody { cube, ball, cross_polytope };

/// Closed-form vol(K) vol(K°) in R^n for the reference presets:
/// cube and cross-polytope give 4^n/n!, the ball gives pi^n/Gamma(n/2+1)^2.
double reference_volume_product(RefBody preset, int n);

/// Convex hull of a planar point set (counterclockwise, collinear points
/// dropped). Used by the random body samplers.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

} // namespace spherloc
