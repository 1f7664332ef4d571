#pragma once

// Exact planar subroutines: convex hull, shoelace area, lattice polygons and
// their boundary point counts.

#include "lpe/polytope.hpp"
#include "lpe/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpe {

inline Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Convex polygon as a counterclockwise vertex list with no three
/// consecutive collinear vertices. Fewer than three vertices means the
/// hull is a segment or a point.
struct ConvexPolygon {
    std::vector<Point> vertices;

    bool degenerate() const { return vertices.size() < 3; }
};

/// Andrew's monotone chain with exact orientation tests.
inline ConvexPolygon hull_2d(std::vector<Point> points) {
    for (const auto& p : points)
        if (p.size() != 2) throw std::invalid_argument("hull_2d: points must be planar");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 1) return {points};
    std::vector<Point> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return {hull};
}

inline ConvexPolygon hull_2d(const RationalPolytope& p) {
    if (p.dim() != 2) throw std::invalid_argument("hull_2d: polytope must be planar");
    return hull_2d(p.generators());
}

/// Shoelace area; zero for degenerate polygons.
inline Rational area_2d(const ConvexPolygon& poly) {
    if (poly.degenerate()) return 0;
    Rational twice = 0;
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return twice / 2;
}

inline Rational area_2d(const RationalPolytope& p) { return area_2d(hull_2d(p)); }

/// Convex polygon with integer vertices, counterclockwise.
class LatticePolygon {
public:
    explicit LatticePolygon(ConvexPolygon hull) : hull_(std::move(hull)) {
        for (const auto& v : hull_.vertices)
            if (!is_integer_point(v)) throw std::invalid_argument("LatticePolygon: non-integer vertex");
    }

    static LatticePolygon from_points(std::vector<Point> points) { return LatticePolygon(hull_2d(std::move(points))); }

    const std::vector<Point>& vertices() const { return hull_.vertices; }
    const ConvexPolygon& hull() const { return hull_; }
    bool degenerate() const { return hull_.degenerate(); }

    RationalPolytope as_polytope() const {
        if (hull_.vertices.empty()) throw std::invalid_argument("LatticePolygon: empty");
        return RationalPolytope(2, hull_.vertices);
    }

private:
    ConvexPolygon hull_;
};

inline Integer edge_lattice_steps(const Point& a, const Point& b) {
    Integer dx = abs(Integer(b[0].get_num() - a[0].get_num()));
    Integer dy = abs(Integer(b[1].get_num() - a[1].get_num()));
    Integer g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    return g;
}

/// b(P): integer points on the boundary, the gcd sum over edges. A segment
/// counts its integer points, a point counts 1.
inline Integer boundary_lattice_count(const LatticePolygon& poly) {
    const auto& v = poly.vertices();
    if (v.empty()) throw std::invalid_argument("boundary_lattice_count: empty polygon");
    if (v.size() == 1) return 1;
    if (v.size() == 2) return edge_lattice_steps(v[0], v[1]) + 1;
    Integer total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) total += edge_lattice_steps(v[i], v[(i + 1) % v.size()]);
    return total;
}

}  // namespace lpe
