#pragma once

// Set expressions over rational polytopes with exact membership:
//
//   Base(P)                P
//   Dilate(P, c, open)     P + (-c, c)^n      dist_inf(z, P) <  c
//   Dilate(P, c, closed)   P + [-c, c]^n      dist_inf(z, P) <= c
//   Erode(P, c)            P ~ (-c, c)^n      z + u in P for all u in {-c, c}^n
//   Intersect(A, B)        A and B
//
// plus an optional slice mask at the root restricting lattice enumeration
// to Z^k x {0} on a chosen set of free coordinates.
//
// For evaluation a region is flattened into a conjunction of atoms, each of
// the form  shift + P + c * cube  with a strict or non-strict cube. Every
// atom is convex, so its trace on an axis-parallel line is an interval whose
// endpoints two LPs determine exactly; lattice counting sums the integer
// points of those intervals line by line.

#include "lpe/lp.hpp"
#include "lpe/polytope.hpp"
#include "lpe/rational.hpp"
#include "lpe/volume.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpe {

enum class Openness { Open, Closed };

/// Free coordinates range over Z, the others are pinned to 0.
struct SublatticeMask {
    std::vector<std::size_t> free;

    static SublatticeMask first(std::size_t k) {
        SublatticeMask m;
        for (std::size_t i = 0; i < k; ++i) m.free.push_back(i);
        return m;
    }

    friend bool operator==(const SublatticeMask&, const SublatticeMask&) = default;
};

class UnsupportedShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Region {
public:
    enum class Kind { Base, Dilate, Erode, Intersect };

    static Region base(RationalPolytope p) { return Region(make_node(Kind::Base, std::move(p), 0, Openness::Closed)); }

    /// Dilate(P, 0, .) is the closed base.
    static Region dilate(RationalPolytope p, const Rational& radius, Openness openness) {
        if (radius < 0) throw std::domain_error("Region::dilate: negative radius");
        if (radius == 0) return base(std::move(p));
        return Region(make_node(Kind::Dilate, std::move(p), radius, openness));
    }

    /// Dilating a Base or Dilate region accumulates the radius; the result is
    /// open if any positive-radius summand is open.
    static Region dilate(const Region& r, const Rational& radius, Openness openness) {
        return sum(r, dilate(RationalPolytope::origin(r.dim()), radius, openness));
    }

    static Region erode(RationalPolytope p, const Rational& radius) {
        if (radius <= 0) throw std::domain_error("Region::erode: radius must be positive");
        return Region(make_node(Kind::Erode, std::move(p), radius, Openness::Closed));
    }

    static Region erode(const Region& r, const Rational& radius) {
        if (r.kind() != Kind::Base) throw UnsupportedShapeError("Region::erode: only closed polytope bases erode");
        return erode(r.polytope(), radius);
    }

    static Region intersect(const Region& a, const Region& b) {
        if (a.dim() != b.dim()) throw std::invalid_argument("Region::intersect: dimension mismatch");
        auto node = std::make_shared<Node>();
        node->kind = Kind::Intersect;
        node->dim = a.dim();
        node->left = a.node_;
        node->right = b.node_;
        return Region(node);
    }

    /// Minkowski sum of Base/Dilate regions, normalized to a single node.
    static Region sum(const Region& a, const Region& b) {
        if (a.dim() != b.dim()) throw std::invalid_argument("Region::sum: dimension mismatch");
        for (const Region* r : {&a, &b})
            if (r->kind() != Kind::Base && r->kind() != Kind::Dilate)
                throw UnsupportedShapeError("Region::sum: only bases and dilations add");
        RationalPolytope p = minkowski_sum(a.polytope(), b.polytope());
        Rational radius = a.radius() + b.radius();
        bool open = (a.kind() == Kind::Dilate && a.openness() == Openness::Open) ||
                    (b.kind() == Kind::Dilate && b.openness() == Openness::Open);
        return dilate(std::move(p), radius, open ? Openness::Open : Openness::Closed);
    }

    Region with_slice(SublatticeMask mask) const {
        std::set<std::size_t> seen;
        if (mask.free.empty()) throw std::invalid_argument("SublatticeMask: empty free set");
        for (auto i : mask.free)
            if (i >= dim() || !seen.insert(i).second) throw std::invalid_argument("SublatticeMask: bad coordinate");
        std::sort(mask.free.begin(), mask.free.end());
        Region r = *this;
        r.slice_ = std::move(mask);
        return r;
    }

    Region without_slice() const {
        Region r = *this;
        r.slice_.reset();
        return r;
    }

    Kind kind() const { return node_->kind; }
    std::size_t dim() const { return node_->dim; }
    const RationalPolytope& polytope() const {
        if (!node_->polytope) throw std::logic_error("Region: node has no polytope");
        return *node_->polytope;
    }
    const Rational& radius() const { return node_->radius; }
    Openness openness() const { return node_->openness; }
    Region left() const { return Region(node_->left); }
    Region right() const { return Region(node_->right); }
    const std::optional<SublatticeMask>& slice() const { return slice_; }

    /// True when the region contains an erosion anywhere.
    bool has_erosion() const { return has_erosion(*node_); }

    Region negated() const {
        return map([](const RationalPolytope& p) { return negate(p); }, Rational(1));
    }
    Region translated(const Point& v) const {
        return map([&](const RationalPolytope& p) { return translate(p, v); }, Rational(1));
    }
    Region scaled(const Rational& lambda) const {
        if (lambda <= 0) throw std::domain_error("Region::scaled: factor must be positive");
        return map([&](const RationalPolytope& p) { return scale(p, lambda); }, lambda);
    }

    /// Same tree with every radius-carrying node made closed.
    Region closure() const {
        Region r(closure_node(node_));
        r.slice_ = slice_;
        return r;
    }

private:
    struct Node {
        Kind kind = Kind::Base;
        std::size_t dim = 0;
        std::shared_ptr<const RationalPolytope> polytope;
        Rational radius;
        Openness openness = Openness::Closed;
        std::shared_ptr<const Node> left, right;
    };

    explicit Region(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static std::shared_ptr<const Node> make_node(Kind kind, RationalPolytope p, const Rational& radius,
                                                 Openness openness) {
        auto node = std::make_shared<Node>();
        node->kind = kind;
        node->dim = p.dim();
        node->polytope = std::make_shared<const RationalPolytope>(std::move(p));
        node->radius = radius;
        node->openness = openness;
        return node;
    }

    static bool has_erosion(const Node& n) {
        if (n.kind == Kind::Erode) return true;
        if (n.kind == Kind::Intersect) return has_erosion(*n.left) || has_erosion(*n.right);
        return false;
    }

    static std::shared_ptr<const Node> closure_node(const std::shared_ptr<const Node>& n) {
        auto copy = std::make_shared<Node>(*n);
        if (n->kind == Kind::Intersect) {
            copy->left = closure_node(n->left);
            copy->right = closure_node(n->right);
        }
        copy->openness = Openness::Closed;
        return copy;
    }

    template <class F>
    Region map(F&& f, const Rational& radius_factor) const {
        Region r(map_node(node_, f, radius_factor));
        r.slice_ = slice_;
        return r;
    }

    template <class F>
    static std::shared_ptr<const Node> map_node(const std::shared_ptr<const Node>& n, F& f, const Rational& factor) {
        auto copy = std::make_shared<Node>(*n);
        if (n->kind == Kind::Intersect) {
            copy->left = map_node(n->left, f, factor);
            copy->right = map_node(n->right, f, factor);
        } else {
            copy->polytope = std::make_shared<const RationalPolytope>(f(*n->polytope));
            copy->radius = n->radius * factor;
        }
        return copy;
    }

    std::shared_ptr<const Node> node_;
    std::optional<SublatticeMask> slice_;
};

/// Interval of the real line with independently open or closed ends.
struct LineInterval {
    bool empty = true;
    Rational lo, hi;
    bool lo_open = false, hi_open = false;

    static LineInterval closed(Rational a, Rational b) { return {a > b, a, b, false, false}; }
    static LineInterval open(Rational a, Rational b) { return {a >= b, a, b, true, true}; }

    LineInterval shifted(const Rational& d) const {
        LineInterval r = *this;
        r.lo += d;
        r.hi += d;
        return r;
    }

    LineInterval intersect(const LineInterval& o) const {
        if (empty || o.empty) return {};
        LineInterval r;
        r.empty = false;
        if (lo > o.lo || (lo == o.lo && lo_open)) {
            r.lo = lo;
            r.lo_open = lo_open;
        } else {
            r.lo = o.lo;
            r.lo_open = o.lo_open;
        }
        if (hi < o.hi || (hi == o.hi && hi_open)) {
            r.hi = hi;
            r.hi_open = hi_open;
        } else {
            r.hi = o.hi;
            r.hi_open = o.hi_open;
        }
        if (r.lo > r.hi || (r.lo == r.hi && (r.lo_open || r.hi_open))) r.empty = true;
        return r;
    }

    /// Integers inside, as [first, last]; first > last when none.
    std::pair<Integer, Integer> integer_range() const {
        if (empty) return {Integer(1), Integer(0)};
        Integer first = lo_open ? Integer(floor_int(lo) + 1) : ceil_int(lo);
        Integer last = hi_open ? Integer(ceil_int(hi) - 1) : floor_int(hi);
        return {first, last};
    }
};

/// shift + conv(body) + radius * cube; the cube is open when `open`.
struct RegionAtom {
    std::shared_ptr<const RationalPolytope> body;
    Point shift;
    Rational radius;
    bool open = false;
    std::size_t family = 0;  ///< atoms of one family differ only by shift
};

struct CompileOptions {
    bool reduce = true;  ///< prune redundant generators before evaluation
};

/// Flattened conjunction of atoms with exact point and line queries.
class CompiledRegion {
public:
    explicit CompiledRegion(const Region& region, CompileOptions options = {}) : dim_(region.dim()) {
        std::map<const RationalPolytope*, std::shared_ptr<const RationalPolytope>> reduced;
        flatten(region, options, reduced);
        if (region.slice())
            mask_ = region.slice()->free;
        else
            for (std::size_t i = 0; i < dim_; ++i) mask_.push_back(i);
        compute_bounds();
    }

    std::size_t dim() const { return dim_; }
    const std::vector<RegionAtom>& atoms() const { return atoms_; }
    const std::vector<std::size_t>& free_coordinates() const { return mask_; }

    /// Conservative integer box [lo_i, hi_i] containing every lattice point.
    const std::vector<Integer>& box_lo() const { return box_lo_; }
    const std::vector<Integer>& box_hi() const { return box_hi_; }
    bool box_empty() const { return box_empty_; }

    bool contains(const Point& z) const {
        if (z.size() != dim_) throw std::invalid_argument("member: dimension mismatch");
        for (const auto& a : atoms_)
            if (!atom_contains(a, z)) return false;
        return true;
    }

    /// Exact trace of the region on the line through `at` along `axis`.
    LineInterval line_trace(const Point& at, std::size_t axis) const {
        std::map<std::pair<std::size_t, Point>, LineInterval> cache;
        return line_trace(at, axis, cache);
    }

    /// Calls visit(line_point, axis, first, last) for every lattice line of
    /// the enumeration box with at least one lattice point of the region;
    /// the lattice points are line_point with x_axis in [first, last].
    template <class Visit>
    void for_each_lattice_segment(Visit&& visit) const {
        if (box_empty_) return;
        std::vector<std::size_t> fixed;
        for (std::size_t i = 0; i < dim_; ++i)
            if (!std::binary_search(mask_.begin(), mask_.end(), i)) fixed.push_back(i);
        for (auto i : fixed)
            if (box_lo_[i] > 0 || box_hi_[i] < 0) return;
        // Trace along the free coordinate with the widest range.
        std::size_t axis = mask_.front();
        for (auto i : mask_)
            if (box_hi_[i] - box_lo_[i] > box_hi_[axis] - box_lo_[axis]) axis = i;
        std::vector<std::size_t> sweep;
        for (auto i : mask_)
            if (i != axis) sweep.push_back(i);
        Point at = zero_point(dim_);
        std::vector<Integer> counter(sweep.size());
        for (std::size_t k = 0; k < sweep.size(); ++k) counter[k] = box_lo_[sweep[k]];
        for (;;) {
            for (std::size_t k = 0; k < sweep.size(); ++k) at[sweep[k]] = Rational(counter[k]);
            at[axis] = 0;
            std::map<std::pair<std::size_t, Point>, LineInterval> cache;
            LineInterval trace = line_trace(at, axis, cache);
            auto [first, last] = trace.integer_range();
            if (first < box_lo_[axis]) first = box_lo_[axis];
            if (last > box_hi_[axis]) last = box_hi_[axis];
            if (first <= last) visit(static_cast<const Point&>(at), axis, first, last);
            std::size_t k = 0;
            for (; k < sweep.size(); ++k) {
                if (counter[k] < box_hi_[sweep[k]]) {
                    ++counter[k];
                    break;
                }
                counter[k] = box_lo_[sweep[k]];
            }
            if (k == sweep.size()) break;
        }
    }

    Integer lattice_count() const {
        Integer total = 0;
        for_each_lattice_segment([&](const Point&, std::size_t, const Integer& first, const Integer& last) {
            total += last - first + 1;
        });
        return total;
    }

    template <class Visit>
    void for_each_lattice_point(Visit&& visit) const {
        for_each_lattice_segment([&](const Point& at, std::size_t axis, const Integer& first, const Integer& last) {
            Point z = at;
            for (Integer x = first; x <= last; ++x) {
                z[axis] = Rational(x);
                visit(static_cast<const Point&>(z));
            }
        });
    }

    /// Point-by-point count over the box: every lattice point is tested with
    /// `contains`. Independent of the line-trace route.
    Integer lattice_count_pointwise() const {
        Integer total = 0;
        if (box_empty_) return total;
        Point z = zero_point(dim_);
        std::vector<std::size_t> fixed;
        for (std::size_t i = 0; i < dim_; ++i)
            if (!std::binary_search(mask_.begin(), mask_.end(), i)) fixed.push_back(i);
        for (auto i : fixed)
            if (box_lo_[i] > 0 || box_hi_[i] < 0) return total;
        std::vector<Integer> counter(mask_.size());
        for (std::size_t k = 0; k < mask_.size(); ++k) counter[k] = box_lo_[mask_[k]];
        for (;;) {
            for (std::size_t k = 0; k < mask_.size(); ++k) z[mask_[k]] = Rational(counter[k]);
            if (contains(z)) ++total;
            std::size_t k = 0;
            for (; k < mask_.size(); ++k) {
                if (counter[k] < box_hi_[mask_[k]]) {
                    ++counter[k];
                    break;
                }
                counter[k] = box_lo_[mask_[k]];
            }
            if (k == mask_.size()) break;
        }
        return total;
    }

private:
    void flatten(const Region& r, const CompileOptions& options,
                 std::map<const RationalPolytope*, std::shared_ptr<const RationalPolytope>>& reduced) {
        auto body_of = [&](const RationalPolytope& p) {
            auto it = reduced.find(&p);
            if (it != reduced.end()) return it->second;
            auto body = std::make_shared<const RationalPolytope>(options.reduce ? simplified(p) : p);
            reduced.emplace(&p, body);
            return body;
        };
        switch (r.kind()) {
            case Region::Kind::Base:
                atoms_.push_back({body_of(r.polytope()), zero_point(dim_), Rational(0), false, next_family_++});
                break;
            case Region::Kind::Dilate:
                atoms_.push_back({body_of(r.polytope()), zero_point(dim_), r.radius(),
                                  r.openness() == Openness::Open, next_family_++});
                break;
            case Region::Kind::Erode: {
                // z + u in P for every corner u  <=>  z in P - u.
                auto body = body_of(r.polytope());
                std::size_t family = next_family_++;
                for (std::size_t mask = 0; mask < (std::size_t{1} << dim_); ++mask) {
                    Point shift(dim_);
                    for (std::size_t i = 0; i < dim_; ++i) shift[i] = (mask >> i & 1) ? Rational(r.radius()) : Rational(-r.radius());
                    atoms_.push_back({body, std::move(shift), Rational(0), false, family});
                }
                break;
            }
            case Region::Kind::Intersect:
                flatten(r.left(), options, reduced);
                flatten(r.right(), options, reduced);
                break;
        }
    }

    void compute_bounds() {
        box_lo_.assign(dim_, Integer());
        box_hi_.assign(dim_, Integer());
        box_empty_ = false;
        for (std::size_t i = 0; i < dim_; ++i) {
            bool first = true;
            for (const auto& a : atoms_) {
                auto [lo, hi] = bounding_box(*a.body);
                Integer l = ceil_int(lo[i] + a.shift[i] - a.radius);
                Integer h = floor_int(hi[i] + a.shift[i] + a.radius);
                if (first || l > box_lo_[i]) box_lo_[i] = l;
                if (first || h < box_hi_[i]) box_hi_[i] = h;
                first = false;
            }
            if (box_lo_[i] > box_hi_[i]) box_empty_ = true;
        }
    }

    bool atom_contains(const RegionAtom& a, const Point& z) const {
        Point local = sub(z, a.shift);
        if (a.radius == 0) return lpe::contains(*a.body, local);
        Rational d = linf_distance(*a.body, local);
        return a.open ? d < a.radius : d <= a.radius;
    }

    LineInterval line_trace(const Point& at, std::size_t axis,
                            std::map<std::pair<std::size_t, Point>, LineInterval>& cache) const {
        LineInterval result = LineInterval::closed(Rational(-1), Rational(1));
        result.lo_open = result.hi_open = false;
        bool first = true;
        for (const auto& a : atoms_) {
            // Trace of the unshifted atom on the line through at - shift, then shifted back.
            Point local = sub(at, a.shift);
            local[axis] = 0;
            auto key = std::make_pair(a.family, local);
            LineInterval base;
            if (auto it = cache.find(key); it != cache.end())
                base = it->second;
            else {
                base = atom_trace(a, local, axis);
                cache.emplace(std::move(key), base);
            }
            LineInterval t = base.shifted(a.shift[axis]);
            result = first ? t : result.intersect(t);
            first = false;
            if (result.empty) break;
        }
        return result;
    }

    // Trace of conv(body) + radius*cube on {x : x_i = at_i for i != axis}.
    LineInterval atom_trace(const RegionAtom& a, const Point& at, std::size_t axis) const {
        const auto& gens = a.body->generators();
        const std::size_t m = gens.size();
        const std::size_t n = dim_;
        if (a.open) {
            // The open atom meets the line iff the line's ell_inf distance to the
            // body, ignoring the axis coordinate, is below the radius. Then the
            // trace is the interior of the closed trace.
            if (n > 1) {
                LinearProgram gap(m + 1);
                gap.sense = Sense::Minimize;
                gap.objective.assign(m + 1, Rational(0));
                gap.objective[m] = 1;
                std::vector<Rational> ones(m + 1, Rational(1));
                ones[m] = 0;
                gap.add(std::move(ones), Relation::Equal, 1);
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == axis) continue;
                    std::vector<Rational> up(m + 1), down(m + 1);
                    for (std::size_t j = 0; j < m; ++j) up[j] = down[j] = gens[j][i];
                    up[m] = -1;
                    down[m] = 1;
                    gap.add(std::move(up), Relation::LessEq, at[i]);
                    gap.add(std::move(down), Relation::GreaterEq, at[i]);
                }
                LpOutcome g = solve(gap);
                if (g.status != LpStatus::Optimal || g.optimal_value >= a.radius) return {};
            }
        }
        // Variables: lambda_j (m), then w_i in [0, 2r] (n) when radius > 0,
        // with the cube offset u_i = w_i - r.
        const bool cube = a.radius > 0;
        const std::size_t vars = m + (cube ? n : 0);
        LinearProgram lp(vars);
        {
            std::vector<Rational> row(vars, Rational(0));
            for (std::size_t j = 0; j < m; ++j) row[j] = 1;
            lp.add(std::move(row), Relation::Equal, 1);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == axis) continue;
            std::vector<Rational> row(vars, Rational(0));
            for (std::size_t j = 0; j < m; ++j) row[j] = gens[j][i];
            if (cube) row[m + i] = 1;
            lp.add(std::move(row), Relation::Equal, cube ? Rational(at[i] + a.radius) : at[i]);
        }
        if (cube)
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Rational> row(vars, Rational(0));
                row[m + i] = 1;
                lp.add(std::move(row), Relation::LessEq, 2 * a.radius);
            }
        lp.objective.assign(vars, Rational(0));
        for (std::size_t j = 0; j < m; ++j) lp.objective[j] = gens[j][axis];
        if (cube) lp.objective[m + axis] = 1;
        lp.sense = Sense::Maximize;
        LpOutcome hi = solve(lp);
        if (hi.status != LpStatus::Optimal) return {};
        lp.sense = Sense::Minimize;
        LpOutcome lo = solve(lp);
        Rational lo_v = lo.optimal_value - a.radius;
        Rational hi_v = hi.optimal_value - a.radius;
        return a.open ? LineInterval::open(lo_v, hi_v) : LineInterval::closed(lo_v, hi_v);
    }

    std::size_t dim_;
    std::vector<RegionAtom> atoms_;
    std::vector<std::size_t> mask_;
    std::vector<Integer> box_lo_, box_hi_;
    bool box_empty_ = false;
    std::size_t next_family_ = 0;
};

/// Exact membership of a single point.
inline bool member(const Region& r, const Point& z) {
    return CompiledRegion(r, {.reduce = false}).contains(z);
}

/// G(R): lattice points of R, restricted to the slice mask when present.
inline Integer lattice_count(const Region& r) { return CompiledRegion(r).lattice_count(); }

inline std::vector<Point> lattice_points(const Region& r) {
    std::vector<Point> out;
    CompiledRegion(r).for_each_lattice_point([&](const Point& z) { out.push_back(z); });
    return out;
}

/// Counts by testing every lattice point of the bounding box with `member`.
inline Integer lattice_count_pointwise(const Region& r) { return CompiledRegion(r).lattice_count_pointwise(); }

struct VolumeInterval {
    Rational lo;
    Rational hi;
    unsigned resolution = 1;
    bool exact = false;

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

enum class VolumeMode { Auto, CellsOnly };

namespace detail {

// Joint feasibility of the closed atoms and the box z + [-1/2, 1/2]^n.
inline bool cell_meets(const CompiledRegion& body, const Point& z) {
    const std::size_t n = body.dim();
    std::size_t vars = n;  // shared point x, free
    std::vector<std::size_t> offsets;
    for (const auto& a : body.atoms()) {
        offsets.push_back(vars);
        vars += a.body->generators().size() + (a.radius > 0 ? n : 0);
    }
    LinearProgram lp(vars);
    lp.nonnegative.assign(vars, true);
    for (std::size_t i = 0; i < n; ++i) lp.nonnegative[i] = false;
    const Rational half = make_rational(1, 2);
    for (std::size_t k = 0; k < body.atoms().size(); ++k) {
        const auto& a = body.atoms()[k];
        const auto& gens = a.body->generators();
        const std::size_t m = gens.size();
        const std::size_t off = offsets[k];
        std::vector<Rational> ones(vars, Rational(0));
        for (std::size_t j = 0; j < m; ++j) ones[off + j] = 1;
        lp.add(std::move(ones), Relation::Equal, 1);
        for (std::size_t i = 0; i < n; ++i) {
            // sum lambda v_i + w_i - x_i = r - shift_i
            std::vector<Rational> row(vars, Rational(0));
            for (std::size_t j = 0; j < m; ++j) row[off + j] = gens[j][i];
            if (a.radius > 0) row[off + m + i] = 1;
            row[i] = -1;
            lp.add(std::move(row), Relation::Equal, Rational(a.radius - a.shift[i]));
            if (a.radius > 0) {
                std::vector<Rational> cap(vars, Rational(0));
                cap[off + m + i] = 1;
                lp.add(std::move(cap), Relation::LessEq, 2 * a.radius);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(vars, Rational(0));
        row[i] = 1;
        lp.add(row, Relation::LessEq, Rational(z[i] + half));
        lp.add(std::move(row), Relation::GreaterEq, Rational(z[i] - half));
    }
    return solve(lp).feasible();
}

}  // namespace detail

/// Two-sided bounds on the volume of closure(R) by counting cells of the
/// lattice (1/r) Z^n: cells inside give the lower bound, cells meeting the
/// body the upper bound. Single-atom regions (a polytope or its cube
/// dilation) take the exact route in Auto mode.
inline VolumeInterval volume_bounds(const Region& region, unsigned resolution, VolumeMode mode = VolumeMode::Auto) {
    if (resolution == 0) throw std::invalid_argument("volume_bounds: resolution must be positive");
    if (region.has_erosion()) throw UnsupportedShapeError("volume_bounds: erosions are not supported");
    const Region closed = region.without_slice().closure();
    if (mode == VolumeMode::Auto && closed.kind() != Region::Kind::Intersect) {
        Rational v = exact_volume_dilated(closed.polytope(), closed.radius());
        return {v, v, resolution, true};
    }
    const CompiledRegion body(closed.scaled(Rational(resolution)));
    const std::size_t n = body.dim();
    const Rational half = make_rational(1, 2);
    // Cells z + [-1/2, 1/2]^n that can meet the scaled body.
    std::vector<Integer> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = body.box_lo()[i] - 1;
        hi[i] = body.box_hi()[i] + 1;
    }
    Integer inside = 0, meeting = 0;
    std::vector<Integer> counter = lo;
    Point z(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) z[i] = Rational(counter[i]);
        if (detail::cell_meets(body, z)) {
            ++meeting;
            bool all = true;
            for (std::size_t mask = 0; mask < (std::size_t{1} << n) && all; ++mask) {
                Point corner = z;
                for (std::size_t i = 0; i < n; ++i) corner[i] += (mask >> i & 1) ? half : Rational(-half);
                all = body.contains(corner);
            }
            if (all) ++inside;
        }
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (counter[i] < hi[i]) {
                ++counter[i];
                break;
            }
            counter[i] = lo[i];
        }
        if (i == n) break;
    }
    Rational cell = pow(make_rational(1, static_cast<long>(resolution)), n);
    return {Rational(inside) * cell, Rational(meeting) * cell, resolution, false};
}

}  // namespace lpe
