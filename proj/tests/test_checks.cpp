#include "lpe/checks.hpp"
#include "lpe/suite.hpp"

#include <gtest/gtest.h>

namespace lpe {
namespace {

TEST(Checks, UnitCubeCounterexample) {
    for (std::size_t n = 1; n <= 4; ++n) {
        RationalPolytope k = unit_cube_fixture(n);
        Verdict classical = check_rs_diff_classical(k);
        EXPECT_EQ(classical.count("G(K-K)"), pow(Integer(3), n));
        EXPECT_EQ(classical.count("G(K)"), 1);
        EXPECT_EQ(classical.outcome, Outcome::Violated) << n;
        Verdict dilated = check_rs_diff_cube34(k);
        EXPECT_EQ(dilated.count("G(K+(-3/4,3/4)^n)"), pow(Integer(3), n));
        EXPECT_EQ(dilated.outcome, Outcome::HoldsStrict);
    }
    // From n = 5 on the classical form holds for this body.
    EXPECT_TRUE(check_rs_diff_classical(unit_cube_fixture(5)).holds());
}

TEST(Checks, CubeNoncomparability) {
    for (const Rational& r : {Rational(1), Rational(2), make_rational(3, 2), make_rational(5, 2)})
        for (std::size_t n = 1; n <= 3; ++n) {
            CubeComparison c = check_cube_noncomparability(r, n);
            EXPECT_EQ(c.c, pow(Rational((4 * r + 1) / (4 * r + 2)), n));
            EXPECT_EQ(c.c, cube_ratio_exact(minkowski_sum(RationalPolytope::cube(n, r), RationalPolytope::cube(n, r))));
            EXPECT_EQ(c.direction, is_integer(r) ? '<' : '>') << to_string(r) << " n=" << n;
            EXPECT_EQ(c.verdict.outcome, Outcome::HoldsStrict);
        }
    // r = 1, n = 1: K = [-1,1], c = 5/6, G(K) = 3, G(K+(-1,1)) = 3,
    // G(K+(-3/4,3/4)) = 3: 5/6 * 9 / 3 = 5/2 < 3.
    CubeComparison one = check_cube_noncomparability(1, 1);
    EXPECT_EQ(one.sum_side, make_rational(5, 2));
    EXPECT_EQ(one.cube34_side, 3);
}

TEST(Checks, PlanarComparisonHandValues) {
    Verdict v = check_planar_comparison(RationalPolytope::cube(2, 1));
    EXPECT_TRUE(v.strict);
    EXPECT_EQ(v.count("G(K+(-1,1)^2)"), 9);
    EXPECT_EQ(v.count("G(K+(-2,2)^2)"), 25);
    EXPECT_EQ(v.count("G(K-K)"), 25);
    // 9 + 1/2 + 5/3 = 67/6 < 25
    EXPECT_EQ(compare_radical_sums(v.lhs, RadicalSum::rational(make_rational(67, 6))), Ordering::Equal);
    EXPECT_EQ(v.outcome, Outcome::HoldsStrict);
    Verdict o = check_planar_comparison(RationalPolytope::origin(2));
    EXPECT_EQ(compare_radical_sums(o.lhs, RadicalSum::rational(make_rational(11, 6))), Ordering::Equal);
    EXPECT_EQ(o.count("G(K+(-2,2)^2)"), 9);
    EXPECT_THROW(check_planar_comparison(RationalPolytope::cube(3, 1)), std::domain_error);
}

TEST(Checks, GgPlanarHandValues) {
    Verdict sq = check_gg_planar(LatticePolygon::from_points({make_point({0, 0}), make_point({1, 0}), make_point({1, 1}), make_point({0, 1})}));
    EXPECT_EQ(sq.count("G(P-P)"), 9);
    EXPECT_EQ(compare_radical_sums(sq.rhs, RadicalSum::rational(15)), Ordering::Equal);
    EXPECT_EQ(sq.outcome, Outcome::HoldsStrict);
    Verdict tri = check_gg_planar(LatticePolygon::from_points({make_point({0, 0}), make_point({1, 0}), make_point({0, 1})}));
    EXPECT_EQ(tri.count("G(P-P)"), 7);
    EXPECT_EQ(compare_radical_sums(tri.rhs, RadicalSum::rational(10)), Ordering::Equal);
    EXPECT_TRUE(tri.side_assertions.at(0).ok);
    EXPECT_THROW(check_gg_planar(LatticePolygon::from_points({make_point({0, 0}), make_point({2, 2})})), std::domain_error);
}

TEST(Checks, BerwaldFixture) {
    Verdict v = check_berwald(berwald_fixture(), 1, 2);
    EXPECT_EQ(v.values.at(0).value, 6);
    EXPECT_EQ(v.values.at(1).value, 8);
    EXPECT_EQ(compare_radical_sums(v.lhs, RadicalSum::rational(make_rational(18, 5))), Ordering::Equal);
    EXPECT_EQ(compare_radical_sums(v.rhs, RadicalSum::rational(make_rational(256, 25))), Ordering::Equal);
    EXPECT_EQ(v.outcome, Outcome::HoldsStrict);
    EXPECT_THROW(check_berwald(berwald_fixture(), 2, 2), std::domain_error);
}

TEST(Checks, HandCountedInstances) {
    RationalPolytope box = RationalPolytope::cube(2, 1);
    Verdict ps = check_projsec(box, 1);
    EXPECT_EQ(ps.count("G_{n-k}(P K)"), 3);
    EXPECT_EQ(ps.count("G_k(K cap H)"), 3);
    EXPECT_EQ(ps.count("G(K+(-1,1)^n)"), 9);
    EXPECT_TRUE(ps.holds());

    Verdict hm = check_hm_lemma(RationalPolytope::cube(1, 1), 1, 1);
    EXPECT_EQ(hm.values.at(0).value, 3);
    EXPECT_EQ(compare_radical_sums(hm.rhs, RadicalSum::rational(6)), Ordering::Equal);

    Verdict bm = check_bm(box, box, make_rational(1, 3));
    EXPECT_EQ(bm.count("G(K)"), 9);
    EXPECT_EQ(bm.count("G((1-lambda)K+lambda L+(-1,1)^n)"), 9);
    EXPECT_EQ(bm.outcome, Outcome::HoldsEquality);
}

TEST(Checks, Preconditions) {
    RationalPolytope off(2, {make_point({1, 1}), make_point({2, 2})});
    EXPECT_THROW(check_rs_diff_c(off), std::domain_error);
    EXPECT_THROW(check_rs_weak(off, RationalPolytope::cube(2, 1)), std::domain_error);
    EXPECT_THROW(check_bm(off, off, 1), std::domain_error);
    EXPECT_THROW(check_bm(off, RationalPolytope::cube(3, 1), make_rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(check_projsec(RationalPolytope::cube(2, 1), 2), std::domain_error);
    EXPECT_THROW(check_rs_diff_refined(RationalPolytope::cube(2, 1), RationalPolytope::cube(2, make_rational(1, 2))),
                 std::domain_error);
    EXPECT_THROW(check_hm_lemma(RationalPolytope::cube(1, 1), 1, 0), std::domain_error);
}

TEST(Checks, DecisionRules) {
    Verdict v;
    v.lhs = RadicalSum::root(1, 8, 2);
    v.rhs = RadicalSum::root(2, 2, 2);
    EXPECT_EQ(reassess(v), Outcome::HoldsEquality);
    v.strict = true;
    EXPECT_EQ(reassess(v), Outcome::Violated);
    v.strict = false;
    v.side_assertions = {{"always false", false}};
    EXPECT_EQ(reassess(v), Outcome::Violated);
    v.side_assertions.clear();
    Integer big = pow(Integer(2), 100);
    v.lhs = RadicalSum::root(1, Rational(big * big + 1), 2);
    v.rhs = RadicalSum::rational(Rational(big));
    CheckOptions tight;
    tight.precision_cap = 64;
    EXPECT_EQ(reassess(v, tight), Outcome::Indeterminate);
    EXPECT_EQ(reassess(v), Outcome::Violated);
}

// The cell-counting route for c_{K,L} must never contradict the exact one.
TEST(Checks, IntervalVolumeRouteAgrees) {
    CheckOptions interval;
    interval.exact_volumes = false;
    interval.resolution_cap = 32;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        InstanceSpec a = base_spec(seed, 2), b = base_spec(seed + 1000, 2);
        a.generator_count = b.generator_count = 3;
        a.coordinate_range = b.coordinate_range = 2;
        RationalPolytope k = random_polytope(a), l = random_polytope(b);
        Verdict exact = check_rs_sum(k, l);
        Verdict cells = check_rs_sum(k, l, interval);
        ASSERT_TRUE(exact.holds());
        EXPECT_NE(cells.outcome, Outcome::Violated);
        const Rational c = exact.volumes[0].interval.lo / exact.volumes[1].interval.lo;
        const auto& num = cells.volumes[0].interval;
        const auto& den = cells.volumes[1].interval;
        EXPECT_LE(num.lo / den.hi, c);
        EXPECT_GE(num.hi / den.lo, c);
    }
}

TEST(Checks, DualCountRoutesInsideChecks) {
    // Counts reported by a check agree with brute-force pointwise counting.
    RationalPolytope k = standard_simplex(3), l = RationalPolytope::cube(3, 1);
    Verdict v = check_rs_weak(k, l);
    EXPECT_EQ(v.count("G(K+L)"), lattice_count_pointwise(Region::base(minkowski_sum(k, l))));
    EXPECT_EQ(v.count("G(L+(-2,2)^n)"), lattice_count_pointwise(Region::dilate(l, 2, Openness::Open)));
    EXPECT_EQ(v.count("G(L+(-2,2)^n)"), 125);
}

TEST(Suite, FixturesBehaveAsDocumented) {
    for (const auto& v : run_fixtures()) EXPECT_TRUE(verdict_ok(v)) << v.check_id << " " << to_string(v.outcome);
}

TEST(Suite, RandomSuiteSmall) {
    SuiteConfig config;
    config.instances = 2;
    std::vector<Verdict> first = run_random_suite(config);
    EXPECT_GE(first.size(), 24u);
    std::set<std::string> seen;
    for (const auto& v : first) {
        EXPECT_TRUE(verdict_ok(v)) << v.check_id << " " << v.witness.dump();
        seen.insert(v.check_id);
    }
    EXPECT_EQ(seen.size(), random_check_ids().size() + 1);  // plus gg_planar
    std::vector<Verdict> second = run_random_suite(config);
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        EXPECT_EQ(first[i].digest(), second[i].digest());
        EXPECT_EQ(first[i].outcome, second[i].outcome);
    }
}

}  // namespace
}  // namespace lpe
