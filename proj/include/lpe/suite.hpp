#pragma once

// Fixture corpus and the seeded random property suite. Every random
// instance is a pure function of (root seed, check id, dimension, index).

#include "lpe/checks.hpp"
#include "lpe/concave.hpp"
#include "lpe/instances.hpp"
#include "lpe/planar.hpp"
#include "lpe/polytope.hpp"
#include "lpe/rational.hpp"
#include "lpe/serialize.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lpe {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// --- fixtures ------------------------------------------------------------

/// [-1/2, 1/2]^n: G(K) = 1 and G(K-K) = 3^n.
inline RationalPolytope unit_cube_fixture(std::size_t n) { return RationalPolytope::cube(n, make_rational(1, 2)); }

/// conv{0, e_1, ..., e_n}.
inline RationalPolytope standard_simplex(std::size_t n) {
    std::vector<Point> gens{zero_point(n)};
    for (std::size_t i = 0; i < n; ++i) {
        Point e = zero_point(n);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return RationalPolytope(n, std::move(gens));
}

/// K = [-2,2], f = min(2 - x, 2 + x).
inline ConcavePWA berwald_fixture() {
    return ConcavePWA(RationalPolytope(1, {make_point({-2}), make_point({2})}),
                      {{make_point({-1}), Rational(2)}, {make_point({1}), Rational(2)}});
}

struct Fixture {
    std::string name;
    Json instance;
};

/// Named reference instances, as written to the fixtures directory.
inline std::vector<Fixture> fixture_corpus() {
    std::vector<Fixture> out;
    for (std::size_t n = 1; n <= 4; ++n)
        out.push_back({"unit-cube-counterexample-n" + std::to_string(n), {{"K", to_json(unit_cube_fixture(n))}}});
    for (const char* r : {"1", "2", "3/2", "5/2"})
        for (std::size_t n = 1; n <= 3; ++n) {
            std::string tag = r;
            for (auto& c : tag)
                if (c == '/') c = '_';
            out.push_back({"cube-noncomparability-r" + tag + "-n" + std::to_string(n),
                           {{"r", r}, {"n", n}, {"K", to_json(RationalPolytope::cube(n, parse_rational(r)))}}});
        }
    for (std::size_t n = 1; n <= 3; ++n)
        out.push_back({"simplex-n" + std::to_string(n), {{"K", to_json(standard_simplex(n))}}});
    for (std::size_t n = 1; n <= 3; ++n)
        out.push_back({"box-r1-n" + std::to_string(n), {{"K", to_json(RationalPolytope::cube(n, Rational(1)))}}});
    out.push_back({"berwald-1d", {{"f", to_json(berwald_fixture())}, {"p", 1}, {"q", 2}}});
    return out;
}

/// Verdicts for the fixture corpus. Rows of the undilated difference-body
/// form on small cubes are expected to fail and are flagged as such.
inline std::vector<Verdict> run_fixtures(const CheckOptions& options = {}) {
    std::vector<Verdict> out;
    for (std::size_t n = 1; n <= 4; ++n) {
        const RationalPolytope k = unit_cube_fixture(n);
        Verdict classical = check_rs_diff_classical(k, options);
        classical.expected_violation = true;
        out.push_back(std::move(classical));
        out.push_back(check_rs_diff_cube34(k, options));
    }
    for (const Rational& r : {Rational(1), Rational(2), make_rational(3, 2), make_rational(5, 2)})
        for (std::size_t n = 1; n <= 3; ++n) {
            out.push_back(check_cube_noncomparability(r, n, options).verdict);
            out.push_back(check_rs_diff_c(RationalPolytope::cube(n, r), options));
        }
    for (std::size_t n = 1; n <= 3; ++n) {
        const RationalPolytope t = standard_simplex(n), b = RationalPolytope::cube(n, Rational(1));
        out.push_back(check_bm(t, b, make_rational(1, 2), options));
        out.push_back(check_rs_diff_cube34(t, options));
        out.push_back(check_rs_sum(t, b, options));
        out.push_back(check_rs_diff_c(t, options));
        out.push_back(check_rs_weak(t, b, options));
        out.push_back(check_rs_diff_refined(t, b, options));
        out.push_back(check_rs_diff_refined_sums(t, options));
        out.push_back(check_hm_lemma(t, Rational(1), 1, options));
        for (std::size_t k = 1; k < n; ++k) {
            out.push_back(check_projsec(t, k, std::nullopt, options));
            out.push_back(check_projsec_refined(t, k, std::nullopt, options));
        }
    }
    out.push_back(check_planar_comparison(RationalPolytope::origin(2), options));
    out.push_back(check_planar_comparison(RationalPolytope::cube(2, Rational(1)), options));
    out.push_back(check_berwald(berwald_fixture(), 1, 2, options));
    out.push_back(check_hm_lemma(RationalPolytope::cube(1, Rational(1)), Rational(1), 1, options));
    out.push_back(check_gg_planar(LatticePolygon::from_points({make_point({0, 0}), make_point({1, 0}), make_point({1, 1}), make_point({0, 1})}), options));
    out.push_back(check_gg_planar(LatticePolygon::from_points({make_point({0, 0}), make_point({1, 0}), make_point({0, 1})}), options));
    return out;
}

// --- random property suite -------------------------------------------------

struct SuiteConfig {
    std::uint64_t seed = kDefaultSeed;
    std::size_t instances = 4;          ///< per (check, dimension)
    std::vector<std::size_t> dims{1, 2, 3};
    std::vector<std::string> checks;    ///< empty: all random checks
    CheckOptions options;
};

/// Coordinates in [-5,5] with denominators up to 3, 1 to 8 generators.
inline InstanceSpec base_spec(std::uint64_t seed, std::size_t n) {
    InstanceSpec s;
    s.seed = seed;
    s.dim = n;
    s.coordinate_range = 5;
    s.denominator_bound = 3;
    Rng rng(mix_seed(seed));
    s.generator_count = static_cast<std::size_t>(rng.uniform(1, 8));
    return s;
}

inline Rational random_lambda(std::uint64_t seed) {
    Rng rng(mix_seed(seed ^ 0x6c616d626461ULL));
    std::int64_t den = rng.uniform(2, 6);
    return make_rational(rng.uniform(1, den - 1), den);
}

struct RandomCheck {
    std::string id;
    std::size_t min_dim = 1, max_dim = 3;
    std::function<Verdict(std::uint64_t seed, std::size_t n, const CheckOptions&)> run;
};

inline std::vector<RandomCheck> random_checks() {
    auto polytope = [](std::uint64_t seed, std::size_t n, bool origin) {
        InstanceSpec s = base_spec(seed, n);
        s.contain_origin = origin;
        return random_polytope(s);
    };
    auto second = [](std::uint64_t seed) { return mix_seed(seed ^ 0x4c4cULL); };
    std::vector<RandomCheck> out;
    out.push_back({"bm", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       return check_bm(polytope(s, n, false), polytope(second(s), n, false), random_lambda(s), o);
                   }});
    out.push_back({"rs_diff_cube34", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       return check_rs_diff_cube34(polytope(s, n, false), o);
                   }});
    out.push_back({"rs_sum", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       return check_rs_sum(polytope(s, n, false), polytope(second(s), n, false), o);
                   }});
    out.push_back({"rs_diff_c", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       return check_rs_diff_c(polytope(s, n, true), o);
                   }});
    auto section = [](std::uint64_t s, std::size_t n) {
        // Random k and a random coordinate subspace of that dimension.
        Rng rng(mix_seed(s ^ 0x48ULL));
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) - 1));
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(i);
        for (std::size_t i = n; i-- > 1;)
            std::swap(all[i], all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)))]);
        std::vector<std::size_t> h(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(h.begin(), h.end());
        return h;
    };
    out.push_back({"projsec", 2, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       auto h = section(s, n);
                       return check_projsec(polytope(s, n, false), h.size(), h, o);
                   }});
    out.push_back({"projsec_refined", 2, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       auto h = section(s, n);
                       return check_projsec_refined(polytope(s, n, true), h.size(), h, o);
                   }});
    out.push_back({"rs_weak", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       return check_rs_weak(polytope(s, n, true), polytope(second(s), n, true), o);
                   }});
    out.push_back({"rs_diff_refined", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       InstanceSpec ls = base_spec(second(s), n);
                       ls.contain_unit_cube_corners = true;
                       return check_rs_diff_refined(polytope(s, n, true), random_polytope(ls), o);
                   }});
    out.push_back({"rs_diff_refined_sums", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       return check_rs_diff_refined_sums(polytope(s, n, true), o);
                   }});
    out.push_back({"planar_comparison", 2, 2, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       return check_planar_comparison(polytope(s, n, true), o);
                   }});
    out.push_back({"berwald", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       InstanceSpec spec = base_spec(s, n);
                       spec.contain_origin = true;
                       Rng rng(mix_seed(s ^ 0x7071ULL));
                       spec.piece_pairs = static_cast<std::size_t>(rng.uniform(0, 3));
                       auto q = static_cast<unsigned long>(rng.uniform(2, 4));
                       auto p = static_cast<unsigned long>(rng.uniform(1, static_cast<std::int64_t>(q) - 1));
                       return check_berwald(random_concave(spec, random_polytope(spec)), p, q, o);
                   }});
    out.push_back({"hm_lemma", 1, 3, [=](std::uint64_t s, std::size_t n, const CheckOptions& o) {
                       Rng rng(mix_seed(s ^ 0x686dULL));
                       Rational m = make_rational(rng.uniform(1, 20), rng.uniform(1, 4));
                       auto p = static_cast<unsigned long>(rng.uniform(1, 3));
                       return check_hm_lemma(polytope(s, n, true), m, p, o);
                   }});
    return out;
}

inline std::vector<std::string> random_check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : random_checks()) ids.push_back(c.id);
    return ids;
}

/// Random lattice polygons for the planar lattice check.
inline LatticePolygon random_gg_polygon(std::uint64_t root, std::size_t index) {
    InstanceSpec s;
    s.seed = derive_seed(root, "gg_planar", index);
    s.dim = 2;
    s.lattice_polygon_mode = true;
    s.coordinate_range = 5;
    s.generator_count = 3 + static_cast<std::size_t>(Rng(mix_seed(s.seed)).uniform(0, 5));
    return random_lattice_polygon(s);
}

/// Runs every selected random check on `instances` instances per supported
/// dimension; the callback, when given, sees each verdict as produced.
inline std::vector<Verdict> run_random_suite(const SuiteConfig& config,
                                             const std::function<void(const Verdict&)>& progress = {}) {
    std::vector<Verdict> out;
    for (const auto& check : random_checks()) {
        if (!config.checks.empty() &&
            std::find(config.checks.begin(), config.checks.end(), check.id) == config.checks.end())
            continue;
        for (std::size_t n : config.dims) {
            if (n < check.min_dim || n > check.max_dim) continue;
            for (std::size_t i = 0; i < config.instances; ++i) {
                std::uint64_t seed = derive_seed(config.seed, check.id + "/" + std::to_string(n), i);
                out.push_back(check.run(seed, n, config.options));
                if (progress) progress(out.back());
            }
        }
    }
    if (config.checks.empty() ||
        std::find(config.checks.begin(), config.checks.end(), "gg_planar") != config.checks.end()) {
        if (std::find(config.dims.begin(), config.dims.end(), 2) != config.dims.end())
            for (std::size_t i = 0; i < config.instances; ++i) {
                out.push_back(check_gg_planar(random_gg_polygon(config.seed, i), config.options));
                if (progress) progress(out.back());
            }
    }
    return out;
}

/// True when the verdict is acceptable: it holds, or it is a documented
/// expected failure that did fail.
inline bool verdict_ok(const Verdict& v) {
    if (v.expected_violation) return v.outcome == Outcome::Violated;
    return v.holds();
}

}  // namespace lpe
