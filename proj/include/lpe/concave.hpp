#pragma once

// Concave piecewise-affine functions f(x) = min_j (a_j . x + b_j) on a
// polytope K, the extension f_diamond(z) = sup_{u in (-1,1)^n} f(z + u),
// the cone function h_m, and discrete power sums over lattice points.

#include "lpe/lp.hpp"
#include "lpe/polytope.hpp"
#include "lpe/rational.hpp"
#include "lpe/region.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpe {

struct AffinePiece {
    Point slope;
    Rational intercept;

    Rational operator()(const Point& x) const { return dot(slope, x) + intercept; }

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

class ConcavePWA {
public:
    ConcavePWA(RationalPolytope domain, std::vector<AffinePiece> pieces)
        : domain_(std::move(domain)), pieces_(std::move(pieces)) {
        if (pieces_.empty()) throw std::invalid_argument("ConcavePWA: no pieces");
        for (const auto& p : pieces_)
            if (p.slope.size() != domain_.dim()) throw std::invalid_argument("ConcavePWA: slope dimension mismatch");
    }

    static ConcavePWA constant(RationalPolytope domain, const Rational& c) {
        std::size_t n = domain.dim();
        return ConcavePWA(std::move(domain), {{zero_point(n), c}});
    }

    const RationalPolytope& domain() const { return domain_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    std::size_t dim() const { return domain_.dim(); }

    /// min_j of the affine pieces; defined on all of R^n.
    Rational operator()(const Point& x) const {
        Rational best = pieces_.front()(x);
        for (std::size_t j = 1; j < pieces_.size(); ++j) best = std::min(best, pieces_[j](x));
        return best;
    }

    friend bool operator==(const ConcavePWA&, const ConcavePWA&) = default;

private:
    RationalPolytope domain_;
    std::vector<AffinePiece> pieces_;
};

namespace detail {

// max t subject to t <= a_j . y + b_j for all j, y in conv(K), plus the box
// |y_i - z_i| <= 1 when `box` is given. Variables: lambda (m), t (free).
inline LpOutcome max_over(const ConcavePWA& f, const Point* box) {
    const auto& gens = f.domain().generators();
    const std::size_t m = gens.size(), n = f.dim();
    LinearProgram lp(m + 1);
    lp.nonnegative.assign(m + 1, true);
    lp.nonnegative[m] = false;
    lp.objective.assign(m + 1, Rational(0));
    lp.objective[m] = 1;
    std::vector<Rational> ones(m + 1, Rational(1));
    ones[m] = 0;
    lp.add(std::move(ones), Relation::Equal, 1);
    for (const auto& piece : f.pieces()) {
        // t - sum_j lambda_j (a . v_j) <= b
        std::vector<Rational> row(m + 1);
        for (std::size_t j = 0; j < m; ++j) row[j] = -dot(piece.slope, gens[j]);
        row[m] = 1;
        lp.add(std::move(row), Relation::LessEq, piece.intercept);
    }
    if (box)
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> row(m + 1);
            for (std::size_t j = 0; j < m; ++j) row[j] = gens[j][i];
            lp.add(row, Relation::LessEq, Rational((*box)[i] + 1));
            lp.add(std::move(row), Relation::GreaterEq, Rational((*box)[i] - 1));
        }
    return solve(lp);
}

}  // namespace detail

/// max of f over conv(K).
inline Rational max_value(const ConcavePWA& f) {
    LpOutcome out = detail::max_over(f, nullptr);
    if (out.status != LpStatus::Optimal) throw std::logic_error("max_value: LP not optimal");
    return out.optimal_value;
}

/// f >= 0 at every generator of K, 0 in K, and max_K f = f(0).
inline bool validate(const ConcavePWA& f) {
    for (const auto& v : f.domain().generators())
        if (f(v) < 0) return false;
    const Point origin = zero_point(f.dim());
    if (!contains(f.domain(), origin)) return false;
    return max_value(f) == f(origin);
}

/// f_diamond(z) = max of f over K intersected with z + [-1,1]^n, for z in
/// K + (-1,1)^n.
inline Rational diamond_eval(const ConcavePWA& f, const Point& z) {
    if (z.size() != f.dim()) throw std::invalid_argument("diamond_eval: dimension mismatch");
    if (!(linf_distance(f.domain(), z) < 1)) throw std::domain_error("diamond_eval: z outside K + (-1,1)^n");
    LpOutcome out = detail::max_over(f, &z);
    if (out.status != LpStatus::Optimal) throw std::logic_error("diamond_eval: LP not optimal");
    return out.optimal_value;
}

enum class SumDomain { DomainLattice, DiamondLattice };

/// Sum of f^p over K cap Z^n, or of f_diamond^p over (K + (-1,1)^n) cap Z^n.
inline Rational power_sum(const ConcavePWA& f, unsigned long p, SumDomain where) {
    if (p == 0) throw std::invalid_argument("power_sum: exponent must be positive");
    Rational total = 0;
    if (where == SumDomain::DomainLattice) {
        CompiledRegion(Region::base(f.domain())).for_each_lattice_point([&](const Point& z) { total += pow(f(z), p); });
    } else {
        CompiledRegion(Region::dilate(f.domain(), Rational(1), Openness::Open))
            .for_each_lattice_point([&](const Point& z) { total += pow(diamond_eval(f, z), p); });
    }
    return total;
}

/// #{z in K cap Z^n : f(z) > t}.
inline Integer superlevel_count(const ConcavePWA& f, const Rational& t) {
    Integer count = 0;
    CompiledRegion(Region::base(f.domain())).for_each_lattice_point([&](const Point& z) {
        if (f(z) > t) ++count;
    });
    return count;
}

/// sum f^p over K cap Z^n rebuilt from superlevel counts: with the distinct
/// lattice values 0 = v_0 < v_1 < ... < v_s,
///   sum_j (v_j^p - v_{j-1}^p) * #{f > v_{j-1}}.
inline Rational layer_cake_sum(const ConcavePWA& f, unsigned long p) {
    if (p == 0) throw std::invalid_argument("layer_cake_sum: exponent must be positive");
    std::vector<Rational> values{Rational(0)};
    CompiledRegion(Region::base(f.domain())).for_each_lattice_point([&](const Point& z) { values.push_back(f(z)); });
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.front() < 0) throw std::domain_error("layer_cake_sum: f negative on a lattice point");
    Rational total = 0;
    for (std::size_t j = 1; j < values.size(); ++j)
        total += (pow(values[j], p) - pow(values[j - 1], p)) * Rational(superlevel_count(f, values[j - 1]));
    return total;
}

/// Cone with base K (containing 0) and apex (0, m); h_m(z) is the largest
/// t in [0, m] with z in (1 - t/m) K + [-1,1]^n.
class ConeFunction {
public:
    ConeFunction(RationalPolytope base, Rational height) : base_(std::move(base)), height_(std::move(height)) {
        if (height_ <= 0) throw std::domain_error("ConeFunction: height must be positive");
        if (!contains(base_, zero_point(base_.dim()))) throw std::domain_error("ConeFunction: base must contain 0");
    }

    const RationalPolytope& base() const { return base_; }
    const Rational& height() const { return height_; }

    Rational operator()(const Point& z) const {
        if (z.size() != base_.dim()) throw std::invalid_argument("cone_eval: dimension mismatch");
        if (!(linf_distance(base_, z) < 1)) throw std::domain_error("cone_eval: z outside K + (-1,1)^n");
        // Variables: lambda (m), w = u + 1 in [0,2]^n, t in [0, m].
        const auto& gens = base_.generators();
        const std::size_t m = gens.size(), n = base_.dim();
        const std::size_t vars = m + n + 1, t = m + n;
        LinearProgram lp(vars);
        lp.objective.assign(vars, Rational(0));
        lp.objective[t] = 1;
        std::vector<Rational> mass(vars, Rational(0));
        for (std::size_t j = 0; j < m; ++j) mass[j] = 1;
        mass[t] = Rational(1) / height_;
        lp.add(std::move(mass), Relation::Equal, 1);  // sum lambda = 1 - t/m
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> row(vars, Rational(0));
            for (std::size_t j = 0; j < m; ++j) row[j] = gens[j][i];
            row[m + i] = 1;
            lp.add(std::move(row), Relation::Equal, Rational(z[i] + 1));
            std::vector<Rational> cap(vars, Rational(0));
            cap[m + i] = 1;
            lp.add(std::move(cap), Relation::LessEq, 2);
        }
        std::vector<Rational> top(vars, Rational(0));
        top[t] = 1;
        lp.add(std::move(top), Relation::LessEq, height_);
        LpOutcome out = solve(lp);
        if (out.status != LpStatus::Optimal) throw std::logic_error("cone_eval: LP not optimal");
        return out.optimal_value;
    }

private:
    RationalPolytope base_;
    Rational height_;
};

inline Rational cone_eval(const ConeFunction& h, const Point& z) { return h(z); }

}  // namespace lpe
