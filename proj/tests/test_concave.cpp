#include "lpe/concave.hpp"
#include "lpe/instances.hpp"
#include "lpe/suite.hpp"

#include <gtest/gtest.h>

namespace lpe {
namespace {

TEST(Concave, BerwaldFixtureSums) {
    ConcavePWA f = berwald_fixture();
    EXPECT_TRUE(validate(f));
    EXPECT_EQ(max_value(f), 2);
    EXPECT_EQ(power_sum(f, 2, SumDomain::DomainLattice), 6);
    EXPECT_EQ(power_sum(f, 1, SumDomain::DiamondLattice), 8);
    EXPECT_EQ(diamond_eval(f, make_point({-2})), 1);
    EXPECT_EQ(diamond_eval(f, make_point({make_rational(-5, 2)})), make_rational(1, 2));
    EXPECT_THROW(diamond_eval(f, make_point({3})), std::domain_error);
    EXPECT_EQ(layer_cake_sum(f, 2), 6);
    EXPECT_EQ(superlevel_count(f, 0), 3);
    EXPECT_EQ(superlevel_count(f, 1), 1);
}

TEST(Concave, ValidateRejectsOffCentreMaximum) {
    RationalPolytope k(1, {make_point({-2}), make_point({2})});
    EXPECT_FALSE(validate(ConcavePWA(k, {{make_point({1}), Rational(3)}})));  // f = 3 + x peaks at 2
    EXPECT_FALSE(validate(ConcavePWA(k, {{make_point({1}), Rational(1)}, {make_point({-1}), Rational(1)}})));  // negative
    EXPECT_TRUE(validate(ConcavePWA::constant(k, 5)));
}

// Max of min(a_j x + b_j) over [lo, hi]: attained at an endpoint or where
// two pieces cross.
Rational max_1d(const ConcavePWA& f, const Rational& lo, const Rational& hi) {
    std::vector<Rational> candidates{lo, hi};
    const auto& ps = f.pieces();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            Rational da = ps[i].slope[0] - ps[j].slope[0];
            if (da == 0) continue;
            Rational x = (ps[j].intercept - ps[i].intercept) / da;
            if (lo <= x && x <= hi) candidates.push_back(x);
        }
    Rational best = f(make_point({candidates[0]}));
    for (const auto& x : candidates) best = std::max(best, f(make_point({x})));
    return best;
}

TEST(Concave, OneDimensionalAgainstBreakpoints) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        InstanceSpec spec;
        spec.seed = seed;
        spec.dim = 1;
        spec.generator_count = 2;
        spec.contain_origin = true;
        spec.piece_pairs = 1 + seed % 3;
        RationalPolytope k = random_polytope(spec);
        ConcavePWA f = random_concave(spec, k);
        auto [blo, bhi] = bounding_box(k);
        Rational a = blo[0], b = bhi[0];
        EXPECT_EQ(max_value(f), max_1d(f, a, b));
        for (long z = floor_int(a - 1).get_si(); z <= ceil_int(b + 1).get_si(); ++z) {
            if (!(Rational(z) > a - 1 && Rational(z) < b + 1)) continue;
            EXPECT_EQ(diamond_eval(f, make_point({Rational(z)})), max_1d(f, std::max(a, Rational(z - 1)), std::min(b, Rational(z + 1))));
        }
    }
}

TEST(Concave, RandomFunctionsAreValid) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        InstanceSpec spec;
        spec.seed = seed;
        spec.dim = 1 + seed % 3;
        spec.generator_count = 2 + seed % 4;
        spec.contain_origin = true;
        RationalPolytope k = random_polytope(spec);
        ConcavePWA f = random_concave(spec, k);
        EXPECT_TRUE(validate(f)) << seed;
    }
}

TEST(Concave, DiamondDominatesNearbyValues) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        InstanceSpec spec;
        spec.seed = seed;
        spec.dim = 2;
        spec.generator_count = 4;
        spec.coordinate_range = 3;
        spec.contain_origin = true;
        RationalPolytope k = random_polytope(spec);
        ConcavePWA f = random_concave(spec, k);
        std::vector<Point> inside = lattice_points(Region::base(k));
        for (const auto& z : lattice_points(Region::dilate(k, 1, Openness::Open))) {
            Rational d = diamond_eval(f, z);
            EXPECT_LE(d, max_value(f));
            for (const auto& y : inside)
                if (abs(Rational(y[0] - z[0])) <= 1 && abs(Rational(y[1] - z[1])) <= 1) EXPECT_GE(d, f(y));
        }
    }
}

TEST(Concave, LayerCakeMatchesDirectSum) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        InstanceSpec spec;
        spec.seed = seed;
        spec.dim = 1 + seed % 3;
        spec.generator_count = 2 + seed % 5;
        spec.coordinate_range = 3;
        spec.contain_origin = true;
        RationalPolytope k = random_polytope(spec);
        ConcavePWA f = random_concave(spec, k);
        unsigned long p = 1 + seed % 3;
        Rational direct = 0;
        for (const auto& z : lattice_points(Region::base(k))) direct += pow(f(z), p);
        EXPECT_EQ(layer_cake_sum(f, p), direct);
        EXPECT_EQ(power_sum(f, p, SumDomain::DomainLattice), direct);
    }
}

// h_m on an interval [a, b] with a <= 0 <= b: t/m is the largest s in [0,1]
// with z in [(1-s) a - 1, (1-s) b + 1].
Rational cone_1d(const Rational& a, const Rational& b, const Rational& m, const Rational& z) {
    Rational s = 1;
    if (b > 0) s = std::min(s, Rational((b + 1 - z) / b));
    if (a < 0) s = std::min(s, Rational((z + 1 - a) / -a));
    return m * s;
}

TEST(Cone, OneDimensionalClosedForm) {
    Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        Rational a = -make_rational(rng.uniform(0, 12), rng.uniform(1, 3));
        Rational b = make_rational(rng.uniform(0, 12), rng.uniform(1, 3));
        Rational m = make_rational(rng.uniform(1, 9), rng.uniform(1, 3));
        ConeFunction h(RationalPolytope(1, {make_point({a}), make_point({b})}), m);
        EXPECT_EQ(h(make_point({0})), m);
        for (int i = 0; i < 10; ++i) {
            Rational z = a - 1 + (b - a + 2) * make_rational(rng.uniform(1, 99), 100);
            EXPECT_EQ(cone_eval(h, make_point({z})), cone_1d(a, b, m, z)) << to_string(z);
        }
    }
    EXPECT_THROW(ConeFunction(RationalPolytope(1, {make_point({1}), make_point({2})}), 1), std::domain_error);
    EXPECT_THROW(ConeFunction(RationalPolytope::cube(1, 1), 0), std::domain_error);
}

}  // namespace
}  // namespace lpe
