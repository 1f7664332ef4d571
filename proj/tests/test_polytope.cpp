#include "lpe/instances.hpp"
#include "lpe/planar.hpp"
#include "lpe/polytope.hpp"
#include "lpe/region.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace lpe {
namespace {

TEST(Polytope, ConstructorsAndOperations) {
    RationalPolytope c = RationalPolytope::cube(2, make_rational(1, 2));
    EXPECT_EQ(c.generators().size(), 4u);
    auto [lo, hi] = bounding_box(c);
    EXPECT_EQ(lo, make_point({make_rational(-1, 2), make_rational(-1, 2)}));
    EXPECT_EQ(hi, make_point({make_rational(1, 2), make_rational(1, 2)}));

    RationalPolytope s(2, {make_point({0, 0}), make_point({1, 0}), make_point({0, 1})});
    RationalPolytope sum = minkowski_sum(s, negate(s));
    EXPECT_EQ(sum.generators().size(), 9u);
    auto [slo, shi] = bounding_box(sum);
    EXPECT_EQ(slo, make_point({-1, -1}));
    EXPECT_EQ(shi, make_point({1, 1}));
    EXPECT_TRUE(contains(sum, make_point({1, -1})));
    EXPECT_FALSE(contains(sum, make_point({1, 1})));

    RationalPolytope t = translate(scale(s, 3), make_point({1, -2}));
    EXPECT_TRUE(contains(t, make_point({4, -2})));
    EXPECT_FALSE(contains(t, make_point({4, -1})));
    EXPECT_THROW(minkowski_sum(s, RationalPolytope::cube(3, 1)), std::invalid_argument);
    EXPECT_THROW(RationalPolytope(2, {}), std::invalid_argument);
    EXPECT_THROW(RationalPolytope(2, {make_point({1})}), std::invalid_argument);
}

TEST(Polytope, ProjectionKeepsCoordinates) {
    RationalPolytope p(3, {make_point({1, 2, 3}), make_point({-1, 0, make_rational(1, 2)})});
    RationalPolytope q = project_coords(p, {2, 0});
    ASSERT_EQ(q.dim(), 2u);
    EXPECT_TRUE(contains(q, make_point({3, 1})));
    EXPECT_TRUE(contains(q, make_point({make_rational(1, 2), -1})));
}

TEST(Polytope, LinfDistance) {
    RationalPolytope c = RationalPolytope::cube(2, 1);
    EXPECT_EQ(linf_distance(c, make_point({0, 0})), 0);
    EXPECT_EQ(linf_distance(c, make_point({3, make_rational(1, 2)})), 2);
    EXPECT_EQ(linf_distance(c, make_point({-2, -2})), 1);
    RationalPolytope seg(2, {make_point({0, 0}), make_point({2, 2})});
    // Closest point to (2,0) in sup norm is (1,1).
    EXPECT_EQ(linf_distance(seg, make_point({2, 0})), 1);
}

TEST(Polytope, ReduceGeneratorsKeepsHull) {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        InstanceSpec spec;
        spec.seed = rng.next();
        spec.dim = static_cast<std::size_t>(rng.uniform(1, 3));
        spec.generator_count = static_cast<std::size_t>(rng.uniform(1, 9));
        RationalPolytope p = random_polytope(spec);
        RationalPolytope r = reduce_generators(p);
        EXPECT_LE(r.generators().size(), p.generators().size());
        for (const auto& g : p.generators()) EXPECT_TRUE(contains(r, g));
        for (const auto& g : r.generators())
            EXPECT_NE(std::find(p.generators().begin(), p.generators().end(), g), p.generators().end());
    }
}

// Membership by LP against the brute-force half-plane description.
TEST(Polytope, MembershipAgainstHalfPlanes) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        InstanceSpec spec;
        spec.seed = seed;
        spec.dim = 2;
        spec.generator_count = 1 + seed % 6;
        spec.coordinate_range = 4;
        RationalPolytope p = random_polytope(spec);
        oracle::HalfPlanes hp(p.generators());
        std::vector<long> lo{-6, -6}, hi{6, 6};
        long lp_count = oracle::count_box(lo, hi, [&](const Point& z) { return contains(p, z); });
        long hp_count = oracle::count_box(lo, hi, [&](const Point& z) { return hp.contains(z); });
        EXPECT_EQ(lp_count, hp_count) << "seed " << seed;
        // Non-lattice probe points as well.
        Rng rng(seed);
        for (int i = 0; i < 30; ++i) {
            Point z = make_point({rng.rational(5, 4), rng.rational(5, 4)});
            EXPECT_EQ(contains(p, z), hp.contains(z));
        }
    }
}

TEST(Planar, HullAndArea) {
    std::vector<Point> pts{make_point({0, 0}), make_point({2, 0}), make_point({1, 1}), make_point({2, 2}),
                           make_point({0, 2}), make_point({1, 0})};
    ConvexPolygon h = hull_2d(pts);
    EXPECT_EQ(h.vertices.size(), 4u);
    EXPECT_EQ(area_2d(h), 4);
    EXPECT_EQ(area_2d(RationalPolytope(2, {make_point({0, 0}), make_point({1, 0}), make_point({0, 1})})),
              make_rational(1, 2));
    EXPECT_TRUE(hull_2d({make_point({0, 0}), make_point({1, 1}), make_point({2, 2})}).degenerate());
    EXPECT_EQ(area_2d(hull_2d({make_point({0, 0}), make_point({1, 1})})), 0);
}

TEST(Planar, BoundaryCount) {
    LatticePolygon sq = LatticePolygon::from_points({make_point({0, 0}), make_point({3, 0}), make_point({3, 3}), make_point({0, 3})});
    EXPECT_EQ(boundary_lattice_count(sq), 12);
    LatticePolygon tri = LatticePolygon::from_points({make_point({0, 0}), make_point({4, 2}), make_point({1, 3})});
    EXPECT_EQ(boundary_lattice_count(tri), 2 + 1 + 1);
}

// Pick: area = I + B/2 - 1, with I and B counted by the half-plane oracle.
TEST(Planar, PickAgainstHalfPlaneCounts) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        InstanceSpec spec;
        spec.seed = seed;
        spec.dim = 2;
        spec.generator_count = 3 + seed % 5;
        spec.lattice_polygon_mode = true;
        LatticePolygon p = random_lattice_polygon(spec);
        oracle::HalfPlanes hp(p.vertices());
        std::vector<long> lo{-5, -5}, hi{5, 5};
        long closed = oracle::count_box(lo, hi, [&](const Point& z) { return hp.contains(z); });
        long interior = oracle::count_box(lo, hi, [&](const Point& z) { return hp.interior_contains(z); });
        EXPECT_EQ(Integer(closed - interior), boundary_lattice_count(p));
        EXPECT_EQ(area_2d(p.hull()), Rational(interior) + Rational(closed - interior) / 2 - 1);
        EXPECT_EQ(lattice_count(Region::base(p.as_polytope())), closed);
    }
}

}  // namespace
}  // namespace lpe
