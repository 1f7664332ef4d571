#include "lpe/instances.hpp"
#include "lpe/report.hpp"
#include "lpe/serialize.hpp"
#include "lpe/suite.hpp"

#include <gtest/gtest.h>

namespace lpe {
namespace {

TEST(Serialize, RationalsAndPoints) {
    EXPECT_EQ(rational_to_json(make_rational(-3, 6)), Json("-1/2"));
    EXPECT_EQ(rational_from_json(Json("4/6")), make_rational(2, 3));
    EXPECT_EQ(rational_from_json(Json(3)), 3);
    EXPECT_THROW(rational_from_json(Json("x")), ParseError);
    EXPECT_THROW(rational_from_json(Json(0.5)), ParseError);
    Point p = make_point({1, make_rational(-7, 3)});
    EXPECT_EQ(point_from_json(point_to_json(p)), p);
}

TEST(Serialize, PolytopeRoundTrip) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        RationalPolytope p = random_polytope(base_spec(seed, 1 + seed % 3));
        RationalPolytope q = polytope_from_json(Json::parse(to_json(p).dump()));
        EXPECT_EQ(q.dim(), p.dim());
        EXPECT_EQ(q.generators(), p.generators());
    }
    EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim":2,"generators":[["1/1"]]})")), ParseError);
    EXPECT_THROW(polytope_from_json(Json::parse(R"({"generators":[]})")), ParseError);
}

TEST(Serialize, RegionRoundTrip) {
    RationalPolytope k = RationalPolytope::cube(2, make_rational(1, 2));
    std::vector<Region> regions{
        Region::base(k),
        Region::dilate(k, make_rational(3, 4), Openness::Open),
        Region::dilate(k, 1, Openness::Closed),
        Region::erode(RationalPolytope::cube(2, 2), 1),
        Region::intersect(Region::base(k), Region::dilate(translate(k, make_point({1, 0})), 1, Openness::Open)),
        Region::base(RationalPolytope::cube(2, 1)).with_slice({{1}}),
    };
    for (const auto& r : regions) {
        Json j = to_json(r);
        Region back = region_from_json(Json::parse(j.dump()));
        EXPECT_EQ(to_json(back), j);
        EXPECT_EQ(lattice_count(back), lattice_count(r));
    }
}

TEST(Serialize, RegionParseErrors) {
    for (const char* text : {R"({"op":"spin"})", R"({"op":"dilate","radius":"1","of":{"dim":1,"generators":[["0"]]}})",
                             R"({"op":"intersect","args":[]})", R"({"op":"slice","free":[5],"of":{"op":"base","polytope":{"dim":1,"generators":[["0"]]}}})",
                             R"({"op":"erode","radius":"-1","of":{"dim":1,"generators":[["0"]]}})", R"([1,2])"})
        EXPECT_THROW(region_from_json(Json::parse(text)), ParseError) << text;
}

TEST(Serialize, ConcaveRoundTrip) {
    ConcavePWA f = berwald_fixture();
    ConcavePWA g = concave_from_json(Json::parse(to_json(f).dump()));
    EXPECT_EQ(to_json(g), to_json(f));
    EXPECT_EQ(power_sum(g, 2, SumDomain::DomainLattice), 6);
}

TEST(Serialize, FnvDigest) {
    EXPECT_EQ(fnv1a_digest(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_digest("a"), "af63dc4c8601ec8c");
}

TEST(Report, RecordsAreCanonicalAndDeterministic) {
    std::vector<Verdict> verdicts = run_fixtures();
    std::vector<Verdict> reversed(verdicts.rbegin(), verdicts.rend());
    EXPECT_EQ(render_records(verdicts), render_records(reversed));
    EXPECT_EQ(render_csv(verdicts), render_csv(reversed));
    std::string records = render_records(verdicts);
    std::size_t lines = 0;
    for (std::size_t pos = 0; (pos = records.find('\n', pos)) != std::string::npos; ++pos) ++lines;
    EXPECT_EQ(lines, verdicts.size());
    Json first = Json::parse(records.substr(0, records.find('\n')));
    for (const char* field : {"check_id", "digest", "relation", "outcome", "precision_bits", "lhs", "rhs", "counts", "witness"})
        EXPECT_TRUE(first.contains(field)) << field;
}

TEST(Report, SummaryMarksExpectedFailures) {
    std::string s = render_summary(run_fixtures());
    EXPECT_NE(s.find("rs_diff_classical"), std::string::npos);
    EXPECT_NE(s.find("(EXPECTED)"), std::string::npos);
    EXPECT_EQ(s.find("(UNEXPECTED)"), std::string::npos);
}

TEST(Report, DecimalStrings) {
    EXPECT_EQ(decimal_string(make_rational(1, 3), 4), "0.3333");
    EXPECT_EQ(decimal_string(make_rational(-5, 2), 2), "-2.50");
    EXPECT_EQ(to_json(RadicalSum::root(1, 2, 2))["terms"][0]["radicand"], "2/1");
}

}  // namespace
}  // namespace lpe
