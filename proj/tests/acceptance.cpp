// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and time limits are fixed below.

#include "lpe/lpe.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using namespace lpe;

constexpr double kDensityTolerance = 0.05;  // criterion 7, relative
constexpr double kRatioTolerance = 0.10;    // criterion 7, relative
constexpr unsigned kPrecisionCap = 256;     // criterion 3

struct Result {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

Result counterexample() {
    Result r;
    for (std::size_t n = 1; n <= 4; ++n) {
        RationalPolytope k = unit_cube_fixture(n);
        Verdict classical = check_rs_diff_classical(k);
        if (classical.count("G(K-K)") != pow(Integer(3), n) || classical.count("G(K)") != 1)
            r.fail("unexpected counts at n=" + std::to_string(n));
        if (!(pow(Integer(3), n) > binomial(2 * n, n)) || classical.outcome != Outcome::Violated)
            r.fail("classical form not violated at n=" + std::to_string(n));
        if (check_rs_diff_cube34(k).outcome != Outcome::HoldsStrict) r.fail("dilated form fails at n=" + std::to_string(n));
    }
    r.detail = r.ok ? "3^n > C(2n,n) for n=1..4, dilated form holds" : r.detail;
    return r;
}

Result noncomparability() {
    Result r;
    for (const Rational& rad : {Rational(1), Rational(2), make_rational(3, 2), make_rational(5, 2)})
        for (std::size_t n = 1; n <= 3; ++n) {
            CubeComparison c = check_cube_noncomparability(rad, n);
            Rational expected_c = pow(Rational((4 * rad + 1) / (4 * rad + 2)), n);
            RationalPolytope k = RationalPolytope::cube(n, rad);
            Rational via_volumes = cube_ratio_exact(minkowski_sum(k, negate(k)));
            std::string tag = "r=" + to_string(rad) + " n=" + std::to_string(n);
            if (c.c != expected_c || via_volumes != expected_c) r.fail("c mismatch at " + tag);
            char want = is_integer(rad) ? '<' : '>';
            if (c.direction != want || c.verdict.outcome != Outcome::HoldsStrict) r.fail("direction wrong at " + tag);
        }
    if (r.ok) r.detail = "c = ((4r+1)/(4r+2))^n; '<' for r in {1,2}, '>' for r in {3/2,5/2}";
    return r;
}

Result random_suite() {
    Result r;
    SuiteConfig config;
    config.instances = 16;
    config.checks = random_check_ids();
    config.options.precision_cap = kPrecisionCap;
    std::vector<Verdict> verdicts = run_random_suite(config);
    std::size_t violated = 0, indeterminate = 0;
    for (const auto& v : verdicts) {
        if (v.outcome == Outcome::Violated) ++violated;
        if (v.outcome == Outcome::Indeterminate) ++indeterminate;
    }
    if (verdicts.size() < 500) r.fail("only " + std::to_string(verdicts.size()) + " instances");
    if (violated || indeterminate)
        r.fail(std::to_string(violated) + " violated, " + std::to_string(indeterminate) + " indeterminate");
    if (r.ok) r.detail = std::to_string(verdicts.size()) + " instances over " + std::to_string(config.checks.size()) +
                         " checks, 0 violated, 0 indeterminate";
    return r;
}

Result lattice_polygons() {
    Result r;
    for (std::size_t i = 0; i < 200; ++i) {
        LatticePolygon p = random_gg_polygon(kDefaultSeed, i);
        Verdict v = check_gg_planar(p);
        if (!v.holds()) r.fail("gg_planar fails on polygon " + std::to_string(i));
        // Pick against interior and boundary points counted by half-planes.
        oracle::HalfPlanes hp(p.vertices());
        std::vector<long> lo{-5, -5}, hi{5, 5};
        long closed = oracle::count_box(lo, hi, [&](const Point& z) { return hp.contains(z); });
        long interior = oracle::count_box(lo, hi, [&](const Point& z) { return hp.interior_contains(z); });
        Rational pick = Rational(interior) + Rational(closed - interior) / 2 - 1;
        if (area_2d(p.hull()) != pick || v.count("G(P)") != closed || v.count("b(P)") != closed - interior)
            r.fail("Pick identity fails on polygon " + std::to_string(i));
    }
    if (r.ok) r.detail = "200 polygons, gg_planar and Pick hold";
    return r;
}

Result membership() {
    Result r;
    long total_points = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        InstanceSpec spec;
        spec.seed = derive_seed(kDefaultSeed, "membership", i);
        spec.dim = 2;
        spec.coordinate_range = 5;
        spec.generator_count = 1 + static_cast<std::size_t>(Rng(spec.seed).uniform(0, 5));
        RationalPolytope p = random_polytope(spec);
        oracle::HalfPlanes base(p.generators()), dil(oracle::with_square(p.generators(), Rational(1)));
        std::vector<long> lo{-7, -7}, hi{7, 7};
        long lp_base = oracle::count_box(lo, hi, [&](const Point& z) { return contains(p, z); });
        long hp_base = oracle::count_box(lo, hi, [&](const Point& z) { return base.contains(z); });
        long lp_dil = oracle::count_box(lo, hi, [&](const Point& z) { return linf_distance(p, z) <= 1; });
        long hp_dil = oracle::count_box(lo, hi, [&](const Point& z) { return dil.contains(z); });
        if (lp_base != hp_base || lp_dil != hp_dil) r.fail("count mismatch on polytope " + std::to_string(i));
        if (lattice_count(Region::base(p)) != lp_base || lattice_count(Region::dilate(p, 1, Openness::Closed)) != lp_dil)
            r.fail("fiber count mismatch on polytope " + std::to_string(i));
        total_points += hp_base + hp_dil;
    }
    if (r.ok) r.detail = "100 polytopes, " + std::to_string(total_points) + " lattice points agree";
    return r;
}

Result berwald() {
    Result r;
    Verdict v = check_berwald(berwald_fixture(), 1, 2);
    if (v.values.at(0).value != 6) r.fail("sum f^2 = " + to_string(v.values.at(0).value));
    if (v.values.at(1).value != 8) r.fail("sum f_diamond = " + to_string(v.values.at(1).value));
    if (compare_radical_sums(v.lhs, RadicalSum::rational(make_rational(18, 5))) != Ordering::Equal ||
        compare_radical_sums(v.rhs, RadicalSum::rational(make_rational(256, 25))) != Ordering::Equal)
        r.fail("sides differ from 18/5 and 256/25");
    if (v.outcome != Outcome::HoldsStrict) r.fail(std::string("outcome ") + to_string(v.outcome));
    if (r.ok) r.detail = "sums 6 and 8, 18/5 <= 256/25 holds_strict";
    return r;
}

Result asymptotics() {
    Result r;
    RationalPolytope k = standard_simplex(2);
    const std::vector<unsigned> schedule{8, 16, 32, 64};
    AsymptoticTable vol = asymptotic_study(k, std::nullopt, "volume", schedule);
    AsymptoticTable diff = asymptotic_study(k, std::nullopt, "rs_diff_cube34", schedule);
    double density = to_double(vol.at(3, "G(rK)/r^n"));
    double ratio = to_double(diff.at(3, "ratio"));
    if (std::abs(density - 0.5) > kDensityTolerance * 0.5) r.fail("density " + std::to_string(density));
    if (std::abs(ratio - 6.0) > kRatioTolerance * 6.0) r.fail("ratio " + std::to_string(ratio));
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (!(diff.at(i, "slack") < diff.at(i - 1, "slack"))) r.fail("slack not decreasing");
    char buf[128];
    std::snprintf(buf, sizeof buf, "G(64K)/64^2 ~ %.4f, ratio ~ %.4f, slacks decreasing", density, ratio);
    if (r.ok) r.detail = buf;
    return r;
}

Result layer_cake() {
    Result r;
    for (std::uint64_t i = 0; i < 100; ++i) {
        std::uint64_t seed = derive_seed(kDefaultSeed, "layer_cake", i);
        InstanceSpec spec = base_spec(seed, 1 + i % 3);
        spec.contain_origin = true;
        RationalPolytope k = random_polytope(spec);
        ConcavePWA f = random_concave(spec, k);
        unsigned long p = 1 + i % 3;
        Rational direct = 0;
        for (const auto& z : lattice_points(Region::base(k))) direct += pow(f(z), p);
        if (layer_cake_sum(f, p) != direct || power_sum(f, p, SumDomain::DomainLattice) != direct)
            r.fail("identity fails on instance " + std::to_string(i));
    }
    if (r.ok) r.detail = "100 instances, p in {1,2,3}";
    return r;
}

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Result()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "counterexample", 1, counterexample},
        {2, "cube noncomparability", 10, noncomparability},
        {3, "random property suite", 600, random_suite},
        {4, "lattice polygons", 30, lattice_polygons},
        {5, "membership oracle", 600, membership},
        {6, "berwald fixture", 600, berwald},
        {7, "triangle asymptotics", 300, asymptotics},
        {8, "layer-cake identity", 600, layer_cake},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (seconds > c.limit_seconds) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "took %.2fs, limit %.0fs", seconds, c.limit_seconds);
            r.fail(buf);
        }
        if (!r.ok) ++failures;
        std::printf("%s criterion %d (%s): %s [%.2fs]\n", r.ok ? "PASS" : "FAIL", c.number, c.name, r.detail.c_str(),
                    seconds);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
