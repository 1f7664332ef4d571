#pragma once

// Seeded random instances. The generator is MT19937-64 (std::mt19937_64,
// fully specified by the C++ standard); integers in [lo, hi] are drawn by
// rejection from its raw 64-bit outputs, never through the
// implementation-defined std::uniform_int_distribution, so corpora
// reproduce bit for bit across standard libraries.

#include "lpe/concave.hpp"
#include "lpe/planar.hpp"
#include "lpe/polytope.hpp"
#include "lpe/rational.hpp"
#include "lpe/serialize.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpe {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
    }

    /// num / den with den in [1, max_den] and num / den in [-bound, bound].
    Rational rational(std::int64_t bound, std::int64_t max_den) {
        std::int64_t den = uniform(1, max_den);
        return make_rational(uniform(-bound * den, bound * den), den);
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, const std::string& label, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix_seed(mix_seed(root ^ h) + index);
}

struct InstanceSpec {
    std::uint64_t seed = 1;
    std::size_t dim = 2;
    std::size_t generator_count = 4;
    std::int64_t coordinate_range = 5;
    std::int64_t denominator_bound = 3;
    bool contain_origin = false;
    bool contain_unit_cube_corners = false;
    bool lattice_polygon_mode = false;
    // Concave functions: pairs of opposite slopes sharing one intercept.
    std::size_t piece_pairs = 2;
    std::int64_t slope_bound = 2;

    void validate() const {
        if (dim == 0 || generator_count == 0 || coordinate_range <= 0 || denominator_bound <= 0 || slope_bound < 0)
            throw std::invalid_argument("InstanceSpec: bounds must be positive");
        if (lattice_polygon_mode && dim != 2) throw std::invalid_argument("InstanceSpec: lattice polygons are planar");
    }
};

inline Json to_json(const InstanceSpec& s) {
    return {{"seed", s.seed},
            {"dim", s.dim},
            {"generator_count", s.generator_count},
            {"coordinate_range", s.coordinate_range},
            {"denominator_bound", s.denominator_bound},
            {"contain_origin", s.contain_origin},
            {"contain_unit_cube_corners", s.contain_unit_cube_corners},
            {"lattice_polygon_mode", s.lattice_polygon_mode},
            {"piece_pairs", s.piece_pairs},
            {"slope_bound", s.slope_bound}};
}

inline InstanceSpec instance_spec_from_json(const Json& j) {
    InstanceSpec s;
    try {
        s.seed = j.at("seed").get<std::uint64_t>();
        s.dim = j.at("dim").get<std::size_t>();
        s.generator_count = j.at("generator_count").get<std::size_t>();
        s.coordinate_range = j.at("coordinate_range").get<std::int64_t>();
        s.denominator_bound = j.at("denominator_bound").get<std::int64_t>();
        s.contain_origin = j.value("contain_origin", false);
        s.contain_unit_cube_corners = j.value("contain_unit_cube_corners", false);
        s.lattice_polygon_mode = j.value("lattice_polygon_mode", false);
        s.piece_pairs = j.value("piece_pairs", std::size_t{2});
        s.slope_bound = j.value("slope_bound", std::int64_t{2});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    s.validate();
    return s;
}

/// Generators with coordinates num/den, |num/den| <= coordinate_range,
/// den <= denominator_bound (integers in lattice polygon mode), then the
/// flagged extra points.
inline RationalPolytope random_polytope(const InstanceSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const std::int64_t den = spec.lattice_polygon_mode ? 1 : spec.denominator_bound;
    std::vector<Point> gens;
    for (std::size_t g = 0; g < spec.generator_count; ++g) {
        Point p(spec.dim);
        for (auto& x : p) x = rng.rational(spec.coordinate_range, den);
        gens.push_back(std::move(p));
    }
    if (spec.contain_origin) gens.push_back(zero_point(spec.dim));
    if (spec.contain_unit_cube_corners) {
        const RationalPolytope unit = RationalPolytope::cube(spec.dim, 1);
        for (const auto& c : unit.generators()) gens.push_back(c);
    }
    return RationalPolytope(spec.dim, std::move(gens));
}

/// Nondegenerate lattice polygon with integer vertices in
/// [-coordinate_range, coordinate_range]^2; degenerate draws are redrawn
/// from the same stream.
inline LatticePolygon random_lattice_polygon(const InstanceSpec& spec) {
    if (spec.dim != 2) throw std::invalid_argument("random_lattice_polygon: dim must be 2");
    if (spec.generator_count < 3) throw std::invalid_argument("random_lattice_polygon: need at least 3 points");
    Rng rng(spec.seed);
    for (;;) {
        std::vector<Point> pts;
        for (std::size_t g = 0; g < spec.generator_count; ++g)
            pts.push_back(make_point({Rational(rng.uniform(-spec.coordinate_range, spec.coordinate_range)),
                                      Rational(rng.uniform(-spec.coordinate_range, spec.coordinate_range))}));
        if (spec.contain_origin) pts.push_back(zero_point(2));
        LatticePolygon p = LatticePolygon::from_points(std::move(pts));
        if (!p.degenerate()) return p;
    }
}

/// f = min over pairs of (B + a.x, B - a.x); slopes are halved until f is
/// nonnegative at every generator of K, so f(0) = B is the maximum.
inline ConcavePWA random_concave(const InstanceSpec& spec, const RationalPolytope& k) {
    if (!contains(k, zero_point(k.dim()))) throw std::domain_error("random_concave: requires 0 in K");
    Rng rng(mix_seed(spec.seed ^ 0x636f6e63617665ULL));
    const Rational intercept = make_rational(rng.uniform(1, spec.coordinate_range * spec.denominator_bound),
                                             rng.uniform(1, spec.denominator_bound));
    std::vector<Point> slopes;
    for (std::size_t j = 0; j < spec.piece_pairs; ++j) {
        Point a(k.dim());
        for (auto& x : a) x = spec.slope_bound == 0 ? Rational(0) : rng.rational(spec.slope_bound, spec.denominator_bound);
        slopes.push_back(std::move(a));
    }
    auto nonnegative = [&] {
        for (const auto& v : k.generators())
            for (const auto& a : slopes)
                if (intercept - abs(Rational(dot(a, v))) < 0) return false;
        return true;
    };
    while (!nonnegative())
        for (auto& a : slopes)
            for (auto& x : a) x /= 2;
    std::vector<AffinePiece> pieces;
    for (const auto& a : slopes) {
        pieces.push_back({a, intercept});
        pieces.push_back({negated(a), intercept});
    }
    if (pieces.empty()) pieces.push_back({zero_point(k.dim()), intercept});
    return ConcavePWA(k, std::move(pieces));
}

}  // namespace lpe
