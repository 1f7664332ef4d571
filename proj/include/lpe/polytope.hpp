#pragma once

// Rational V-polytopes: conv(generators), generators possibly redundant.
// Every query reduces to a small exact LP over convex-combination weights.

#include "lpe/lp.hpp"
#include "lpe/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpe {

class RationalPolytope {
public:
    RationalPolytope(std::size_t dim, std::vector<Point> generators)
        : dim_(dim), generators_(std::move(generators)) {
        if (dim_ == 0) throw std::invalid_argument("RationalPolytope: dimension must be positive");
        if (generators_.empty()) throw std::invalid_argument("RationalPolytope: empty generator list");
        for (const auto& g : generators_)
            if (g.size() != dim_) throw std::invalid_argument("RationalPolytope: generator dimension mismatch");
    }

    static RationalPolytope point(Point p) {
        std::size_t d = p.size();
        return RationalPolytope(d, {std::move(p)});
    }

    static RationalPolytope origin(std::size_t dim) { return point(zero_point(dim)); }

    /// Axis-parallel box prod_i [lo_i, hi_i] from its 2^n corners.
    static RationalPolytope box(const Point& lo, const Point& hi) {
        if (lo.size() != hi.size() || lo.empty()) throw std::invalid_argument("box: bad bounds");
        std::size_t n = lo.size();
        std::vector<Point> corners;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Point c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i & 1) ? hi[i] : lo[i];
            corners.push_back(std::move(c));
        }
        return RationalPolytope(n, std::move(corners));
    }

    /// [-r, r]^n.
    static RationalPolytope cube(std::size_t dim, const Rational& r) {
        return box(Point(dim, Rational(-r)), Point(dim, r));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Point>& generators() const { return generators_; }

    friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;

private:
    std::size_t dim_;
    std::vector<Point> generators_;
};

inline RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Point> gens;
    gens.reserve(p.generators().size() * q.generators().size());
    for (const auto& a : p.generators())
        for (const auto& b : q.generators()) gens.push_back(add(a, b));
    return RationalPolytope(p.dim(), std::move(gens));
}

inline RationalPolytope scale(const RationalPolytope& p, const Rational& lambda) {
    if (lambda < 0) throw std::domain_error("scale: negative factor (negate first)");
    if (lambda == 0) return RationalPolytope::origin(p.dim());
    std::vector<Point> gens;
    for (const auto& g : p.generators()) gens.push_back(scaled(lambda, g));
    return RationalPolytope(p.dim(), std::move(gens));
}

inline RationalPolytope negate(const RationalPolytope& p) {
    std::vector<Point> gens;
    for (const auto& g : p.generators()) gens.push_back(negated(g));
    return RationalPolytope(p.dim(), std::move(gens));
}

inline RationalPolytope translate(const RationalPolytope& p, const Point& v) {
    if (v.size() != p.dim()) throw std::invalid_argument("translate: dimension mismatch");
    std::vector<Point> gens;
    for (const auto& g : p.generators()) gens.push_back(add(g, v));
    return RationalPolytope(p.dim(), std::move(gens));
}

/// Orthogonal projection onto the coordinate subspace spanned by `keep`
/// (0-based indices, kept in the given order).
inline RationalPolytope project_coords(const RationalPolytope& p, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("project_coords: empty coordinate set");
    std::set<std::size_t> seen;
    for (auto k : keep)
        if (k >= p.dim() || !seen.insert(k).second) throw std::invalid_argument("project_coords: bad coordinate set");
    std::vector<Point> gens;
    for (const auto& g : p.generators()) {
        Point x;
        x.reserve(keep.size());
        for (auto k : keep) x.push_back(g[k]);
        gens.push_back(std::move(x));
    }
    return RationalPolytope(keep.size(), std::move(gens));
}

/// Per-coordinate minimum and maximum over the generators.
inline std::pair<Point, Point> bounding_box(const RationalPolytope& p) {
    Point lo = p.generators().front(), hi = lo;
    for (const auto& g : p.generators())
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (g[i] < lo[i]) lo[i] = g[i];
            if (g[i] > hi[i]) hi[i] = g[i];
        }
    return {lo, hi};
}

/// min over x in conv(P) of ||z - x||_inf, via
///   minimize t  s.t.  sum lambda = 1,  |z_i - sum_j lambda_j v_ji| <= t.
inline Rational linf_distance(const RationalPolytope& p, const Point& z) {
    if (z.size() != p.dim()) throw std::invalid_argument("linf_distance: dimension mismatch");
    const std::size_t m = p.generators().size();
    const std::size_t n = p.dim();
    LinearProgram lp(m + 1);
    lp.sense = Sense::Minimize;
    lp.objective.assign(m + 1, Rational(0));
    lp.objective[m] = 1;
    std::vector<Rational> row(m + 1, Rational(0));
    for (std::size_t j = 0; j < m; ++j) row[j] = 1;
    lp.add(row, Relation::Equal, 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> upper(m + 1), lower(m + 1);
        for (std::size_t j = 0; j < m; ++j) upper[j] = lower[j] = p.generators()[j][i];
        upper[m] = -1;  // sum lambda v_i - t <= z_i
        lower[m] = 1;   // sum lambda v_i + t >= z_i
        lp.add(std::move(upper), Relation::LessEq, z[i]);
        lp.add(std::move(lower), Relation::GreaterEq, z[i]);
    }
    LpOutcome out = solve(lp);
    if (out.status != LpStatus::Optimal) throw std::logic_error("linf_distance: LP not optimal");
    return out.optimal_value;
}

/// Exact test z in conv(generators).
inline bool contains(const RationalPolytope& p, const Point& z) {
    if (z.size() != p.dim()) throw std::invalid_argument("contains: dimension mismatch");
    const std::size_t m = p.generators().size();
    LinearProgram lp(m);
    lp.add(std::vector<Rational>(m, Rational(1)), Relation::Equal, 1);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        std::vector<Rational> row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = p.generators()[j][i];
        lp.add(std::move(row), Relation::Equal, z[i]);
    }
    return solve(lp).feasible();
}

/// Drops duplicate generators and generators lying in the convex hull of the
/// others. The generated body is unchanged.
inline RationalPolytope reduce_generators(const RationalPolytope& p) {
    std::vector<Point> gens = p.generators();
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t i = gens.size(); i-- > 0 && gens.size() > 1;) {
        std::vector<Point> others;
        others.reserve(gens.size() - 1);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (contains(RationalPolytope(p.dim(), others), gens[i])) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return RationalPolytope(p.dim(), std::move(gens));
}

}  // namespace lpe
