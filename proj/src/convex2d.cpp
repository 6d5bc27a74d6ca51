#include "spherloc/convex2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace spherloc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

// Distance from the origin to the segment [a, b].
double segment_distance(Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = d.dot(d);
    double s = len2 > 0.0 ? -a.dot(d) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    const Vec2 p = a + d * s;
    return p.norm();
}

} // namespace

Cone2D::Cone2D(double lo, double hi) : t_lo(lo), t_hi(hi) {
    if (!(hi - lo > 0.0) || hi - lo > kPi + 1e-12)
        throw DomainError("Cone2D: angular length must lie in (0, pi]");
}

ConvexBody2D ConvexBody2D::polygon(std::vector<Vec2> ccw_vertices) {
    const std::size_t n = ccw_vertices.size();
    if (n < 4 || n % 2 != 0)
        throw ValidationError("polygon: needs an even vertex count >= 4");

    Polygon poly;
    poly.vertices = std::move(ccw_vertices);

    // Strict convexity, counterclockwise. Collinear or duplicate vertices are
    // rejected at tolerance 1e-12.
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e1 = poly.vertices[(i + 1) % n] - poly.vertices[i];
        const Vec2 e2 = poly.vertices[(i + 2) % n] - poly.vertices[(i + 1) % n];
        if (e1.norm() <= 1e-12 * std::max(1.0, poly.vertices[i].norm()))
            throw ValidationError("polygon: duplicate vertex " + std::to_string((i + 1) % n));
        const double cr = e1.cross(e2);
        if (!(cr > 1e-12 * e1.norm() * e2.norm()))
            throw ValidationError("polygon: vertices must be in strictly convex ccw position (vertex " +
                                  std::to_string((i + 1) % n) + ")");
    }

    // Origin symmetry: sorted ccw, vertex i+n/2 must be the negation of vertex i.
    for (std::size_t i = 0; i < n / 2; ++i) {
        const Vec2 v = poly.vertices[i];
        const Vec2 w = poly.vertices[i + n / 2];
        const double scale = std::max(1.0, v.norm());
        if ((v + w).norm() > 1e-9 * scale)
            throw ValidationError("polygon: vertex set not closed under negation (vertex " +
                                  std::to_string(i) + ")");
    }

    poly.edge_normals.reserve(n);
    poly.edge_offsets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.vertices[i];
        const Vec2 b = poly.vertices[(i + 1) % n];
        const Vec2 e = b - a;
        Vec2 normal{e.y, -e.x};
        const double len = normal.norm();
        normal = {normal.x / len, normal.y / len};
        const double offset = normal.dot(a);
        if (!(offset > 1e-12))
            throw ValidationError("polygon: origin not strictly interior");
        poly.edge_normals.push_back(normal);
        poly.edge_offsets.push_back(offset);
    }

    ConvexBody2D body;
    body.v_ = std::move(poly);
    return body;
}

ConvexBody2D ConvexBody2D::disk(double radius) {
    if (!(radius > 0.0)) throw ValidationError("disk: radius must be positive");
    ConvexBody2D body;
    body.v_ = Disk{radius};
    return body;
}

ConvexBody2D ConvexBody2D::strip(double normal_angle, double half_width) {
    if (!(half_width > 0.0)) throw ValidationError("strip: half_width must be positive");
    ConvexBody2D body;
    body.v_ = Strip{normal_angle, half_width};
    return body;
}

ConvexBody2D ConvexBody2D::whole_plane() {
    ConvexBody2D body;
    body.v_ = WholePlane{};
    return body;
}

double ConvexBody2D::radial(double t) const {
    return std::visit(
        [t](const auto& shape) -> double {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                const Vec2 u = unit_dir(t);
                double rho = kInf;
                for (std::size_t i = 0; i < shape.edge_normals.size(); ++i) {
                    const double d = u.dot(shape.edge_normals[i]);
                    if (d > 1e-15) rho = std::min(rho, shape.edge_offsets[i] / d);
                }
                return rho;
            } else if constexpr (std::is_same_v<T, Disk>) {
                return shape.radius;
            } else if constexpr (std::is_same_v<T, Strip>) {
                const double c = std::abs(std::cos(t - shape.normal_angle));
                return c < 1e-15 ? kInf : shape.half_width / c;
            } else if constexpr (std::is_same_v<T, Intersection>) {
                double rho = kInf;
                for (const auto& b : shape.bodies) rho = std::min(rho, b.radial(t));
                return rho;
            } else {
                return kInf;
            }
        },
        v_);
}

double ConvexBody2D::support(double t) const {
    return std::visit(
        [t, this](const auto& shape) -> double {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                const Vec2 u = unit_dir(t);
                double h = -kInf;
                for (const Vec2& v : shape.vertices) h = std::max(h, u.dot(v));
                return h;
            } else if constexpr (std::is_same_v<T, Disk>) {
                return shape.radius;
            } else if constexpr (std::is_same_v<T, Strip>) {
                if (std::abs(std::sin(t - shape.normal_angle)) > 1e-12)
                    throw Unbounded("support: strip is unbounded off its normal direction");
                return shape.half_width;
            } else if constexpr (std::is_same_v<T, Intersection>) {
                if (!bounded())
                    throw Unbounded("support: unbounded intersection");
                // Boundary point maximizing <x, u> over a convex body containing
                // the origin: coarse scan plus golden-section refinement of
                // rho(s) cos(s - t) over s in (t - pi/2, t + pi/2).
                const auto objective = [&](double s) {
                    const double r = radial(s);
                    return std::isinf(r) ? -kInf : r * std::cos(s - t);
                };
                const int grid = 512;
                double best_s = t;
                double best = -kInf;
                for (int i = 0; i <= grid; ++i) {
                    const double s = t - kPi / 2 + kPi * i / grid;
                    const double val = objective(s);
                    if (val > best) {
                        best = val;
                        best_s = s;
                    }
                }
                double lo = best_s - kPi / grid;
                double hi = best_s + kPi / grid;
                const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
                for (int it = 0; it < 80; ++it) {
                    const double m1 = hi - gr * (hi - lo);
                    const double m2 = lo + gr * (hi - lo);
                    if (objective(m1) < objective(m2))
                        lo = m1;
                    else
                        hi = m2;
                }
                return objective(0.5 * (lo + hi));
            } else {
                throw Unbounded("support: whole plane");
            }
        },
        v_);
}

bool ConvexBody2D::bounded() const {
    return unbounded_directions(*this).empty();
}

double ConvexBody2D::min_radial() const {
    return std::visit(
        [this](const auto& shape) -> double {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                double m = kInf;
                const std::size_t n = shape.vertices.size();
                for (std::size_t i = 0; i < n; ++i)
                    m = std::min(m, segment_distance(shape.vertices[i], shape.vertices[(i + 1) % n]));
                return m;
            } else if constexpr (std::is_same_v<T, Disk>) {
                return shape.radius;
            } else if constexpr (std::is_same_v<T, Strip>) {
                return shape.half_width;
            } else if constexpr (std::is_same_v<T, Intersection>) {
                const int grid = 4096;
                double m = kInf;
                for (int i = 0; i < grid; ++i) m = std::min(m, radial(kTwoPi * i / grid));
                return m;
            } else {
                return kInf;
            }
        },
        v_);
}

double ConvexBody2D::max_radial() const {
    return std::visit(
        [this](const auto& shape) -> double {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, Polygon>) {
                double m = 0.0;
                for (const Vec2& v : shape.vertices) m = std::max(m, v.norm());
                return m;
            } else if constexpr (std::is_same_v<T, Disk>) {
                return shape.radius;
            } else if constexpr (std::is_same_v<T, Intersection>) {
                if (!bounded()) return kInf;
                const int grid = 4096;
                double m = 0.0;
                for (int i = 0; i < grid; ++i) m = std::max(m, radial(kTwoPi * i / grid));
                return m;
            } else {
                return kInf;
            }
        },
        v_);
}

std::string ConvexBody2D::describe() const {
    std::ostringstream out;
    std::visit(
        [&out](const auto& shape) {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, ConvexBody2D::Polygon>) {
                out << "polygon[" << shape.vertices.size() << "]";
            } else if constexpr (std::is_same_v<T, ConvexBody2D::Disk>) {
                out << "disk(" << shape.radius << ")";
            } else if constexpr (std::is_same_v<T, ConvexBody2D::Strip>) {
                out << "strip(" << shape.normal_angle << "," << shape.half_width << ")";
            } else if constexpr (std::is_same_v<T, ConvexBody2D::Intersection>) {
                out << "intersection[" << shape.bodies.size() << "]";
            } else {
                out << "whole_plane";
            }
        },
        v_);
    return out.str();
}

UnboundedDirections unbounded_directions(const ConvexBody2D& body) {
    UnboundedDirections result;
    if (body.is_whole_plane()) {
        result.all = true;
        return result;
    }
    if (body.is_strip()) {
        const auto& s = body.as_strip();
        result.angles = {wrap_two_pi(s.normal_angle + kPi / 2), wrap_two_pi(s.normal_angle - kPi / 2)};
        return result;
    }
    if (body.is_intersection()) {
        // A direction stays unbounded only if every operand is unbounded there.
        bool first = true;
        for (const auto& b : body.as_intersection().bodies) {
            UnboundedDirections u = unbounded_directions(b);
            if (first) {
                result = std::move(u);
                first = false;
                continue;
            }
            if (result.all) {
                result = std::move(u);
                continue;
            }
            if (u.all) continue;
            std::vector<double> common;
            for (double a : result.angles)
                for (double c : u.angles)
                    if (std::abs(wrap_two_pi(a - c + kPi) - kPi) < 1e-12) common.push_back(a);
            result.angles = std::move(common);
        }
        return result;
    }
    return result; // polygon, disk
}

bool UnboundedDirections::meets_arc(double t_lo, double t_hi) const {
    if (all) return true;
    for (double a : angles) {
        // Does a + 2k*pi land in [t_lo, t_hi] for some k?
        const double shifted = t_lo + wrap_two_pi(a - t_lo);
        if (shifted <= t_hi + 1e-12) return true;
    }
    return false;
}

ConvexBody2D polar_dual(const ConvexBody2D& body) {
    if (body.is_disk()) return ConvexBody2D::disk(1.0 / body.as_disk().radius);
    if (!body.is_polygon())
        throw DomainError("polar_dual: implemented for polygons and disks");

    const auto& poly = body.as_polygon();
    const std::size_t n = poly.vertices.size();
    std::vector<Vec2> dual;
    dual.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.vertices[i];
        const Vec2 b = poly.vertices[(i + 1) % n];
        const double det = a.cross(b);
        if (!(det > 1e-300)) throw OriginNotInterior("polar_dual: origin not strictly interior");
        dual.push_back({(b.y - a.y) / det, (a.x - b.x) / det});
    }
    return ConvexBody2D::polygon(std::move(dual));
}

ConvexBody2D intersect(ConvexBody2D a, ConvexBody2D b) {
    if (a.is_whole_plane()) return b;
    if (b.is_whole_plane()) return a;
    ConvexBody2D::Intersection inter;
    const auto absorb = [&inter](ConvexBody2D&& body) {
        if (body.is_intersection()) {
            auto& list = std::get<ConvexBody2D::Intersection>(body.v_).bodies;
            for (auto& item : list) inter.bodies.push_back(std::move(item));
        } else {
            inter.bodies.push_back(std::move(body));
        }
    };
    absorb(std::move(a));
    absorb(std::move(b));
    ConvexBody2D body;
    body.v_ = std::move(inter);
    return body;
}

bool ball_sandwich_check(const ConvexBody2D& body, double inner_r, double outer_R) {
    const double max_rho = body.max_radial();
    if (std::isinf(max_rho) && std::isfinite(outer_R)) return false;
    return inner_r < body.min_radial() && max_rho <= outer_R;
}

double reference_volume_product(RefBody preset, int n) {
    if (n < 2) throw DomainError("reference_volume_product: requires n >= 2");
    switch (preset) {
        case RefBody::cube:
        case RefBody::cross_polytope: {
            double value = 1.0;
            for (int k = 1; k <= n; ++k) value *= 4.0 / k;
            return value;
        }
        case RefBody::ball: {
            const double g = std::tgamma(0.5 * n + 1.0);
            return std::pow(std::numbers::pi, n) / (g * g);
        }
    }
    throw DomainError("reference_volume_product: unknown preset");
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](Vec2 a, Vec2 b) { return (a - b).norm() < 1e-12; }),
                 points.end());
    const std::size_t n = points.size();
    if (n < 3) return points;

    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && (hull[k - 1] - hull[k - 2]).cross(points[i] - hull[k - 2]) <= 1e-12)
            --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && (hull[k - 1] - hull[k - 2]).cross(points[i] - hull[k - 2]) <= 1e-12)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

} // namespace spherloc
