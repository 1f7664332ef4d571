#pragma once

// One function per discrete inequality. Every check assembles both sides
// from exact lattice counts, then decides "lhs <= rhs" (or "lhs < rhs")
// exactly and records everything needed to replay the decision.

#include "lpe/concave.hpp"
#include "lpe/planar.hpp"
#include "lpe/polytope.hpp"
#include "lpe/radical.hpp"
#include "lpe/rational.hpp"
#include "lpe/region.hpp"
#include "lpe/serialize.hpp"
#include "lpe/volume.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpe {

enum class Outcome { HoldsStrict, HoldsEquality, Indeterminate, Violated };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::HoldsStrict: return "holds_strict";
        case Outcome::HoldsEquality: return "holds_equality";
        case Outcome::Indeterminate: return "indeterminate";
        case Outcome::Violated: return "VIOLATED";
    }
    return "?";
}

struct NamedCount {
    std::string name;
    Integer value;
};

struct NamedVolume {
    std::string name;
    VolumeInterval interval;
};

struct NamedValue {
    std::string name;
    Rational value;
};

struct SideAssertion {
    std::string name;
    bool ok = false;
};

struct Verdict {
    std::string check_id;
    bool strict = false;  ///< relation is "<" rather than "<="
    RadicalSum lhs, rhs;
    Outcome outcome = Outcome::Indeterminate;
    unsigned precision_bits = 0;
    Json witness;
    std::vector<NamedCount> counts;
    std::vector<NamedVolume> volumes;
    std::vector<NamedValue> values;  ///< other exact intermediate quantities
    std::vector<SideAssertion> side_assertions;
    bool expected_violation = false;  ///< documents a known failing form

    const char* relation() const { return strict ? "<" : "<="; }
    bool holds() const { return outcome == Outcome::HoldsStrict || outcome == Outcome::HoldsEquality; }
    std::string digest() const { return fnv1a_digest(witness.dump()); }

    const Integer& count(const std::string& name) const {
        for (const auto& c : counts)
            if (c.name == name) return c.value;
        throw std::out_of_range("Verdict: no count named " + name);
    }
};

struct CheckOptions {
    unsigned precision_cap = kDefaultPrecisionCap;
    /// Volume ratios are exact by default; otherwise cell counting with
    /// doubling resolution up to this cap.
    bool exact_volumes = true;
    unsigned resolution_cap = 256;
};

namespace detail {

inline Integer count_base(const RationalPolytope& p) { return lattice_count(Region::base(p)); }

inline Integer count_dilated(const RationalPolytope& p, const Rational& c, Openness o = Openness::Open) {
    return lattice_count(Region::dilate(p, c, o));
}

inline void require_origin(const RationalPolytope& k, const char* who) {
    if (!contains(k, zero_point(k.dim()))) throw std::domain_error(std::string(who) + ": requires 0 in K");
}

/// Decides the verdict from its two sides; strict relations report
/// equality as a violation.
inline void decide(Verdict& v, const CheckOptions& options) {
    for (const auto& s : v.side_assertions)
        if (!s.ok) {
            v.outcome = Outcome::Violated;
            return;
        }
    try {
        ComparisonResult r = compare_radical_sums_detailed(v.lhs, v.rhs, options.precision_cap);
        v.precision_bits = r.precision_bits;
        switch (r.ordering) {
            case Ordering::Less: v.outcome = Outcome::HoldsStrict; break;
            case Ordering::Equal: v.outcome = v.strict ? Outcome::Violated : Outcome::HoldsEquality; break;
            case Ordering::Greater: v.outcome = Outcome::Violated; break;
        }
    } catch (const IndeterminateError& e) {
        v.outcome = Outcome::Indeterminate;
        v.precision_bits = e.precision_bits();
    }
}

inline Verdict start(std::string id, Json witness) {
    Verdict v;
    v.check_id = std::move(id);
    v.witness = std::move(witness);
    return v;
}

}  // namespace detail

/// Re-runs the comparison on the recorded sides.
inline Outcome reassess(const Verdict& v, const CheckOptions& options = {}) {
    Verdict copy = v;
    detail::decide(copy, options);
    return copy.outcome;
}

/// (1-lambda) G(K)^(1/n) + lambda G(L)^(1/n) <= G((1-lambda)K + lambda L + (-1,1)^n)^(1/n).
inline Verdict check_bm(const RationalPolytope& k, const RationalPolytope& l, const Rational& lambda,
                        const CheckOptions& options = {}) {
    if (k.dim() != l.dim()) throw std::invalid_argument("check_bm: dimension mismatch");
    if (lambda <= 0 || lambda >= 1) throw std::domain_error("check_bm: lambda must lie in (0,1)");
    const unsigned n = static_cast<unsigned>(k.dim());
    Verdict v = detail::start("bm", {{"K", to_json(k)}, {"L", to_json(l)}, {"lambda", to_string(lambda)}});
    const RationalPolytope ks = simplified(k), ls = simplified(l);
    const RationalPolytope mix = minkowski_sum(scale(ks, 1 - lambda), scale(ls, lambda));
    Integer gk = detail::count_base(ks), gl = detail::count_base(ls), gm = detail::count_dilated(mix, 1);
    v.counts = {{"G(K)", gk}, {"G(L)", gl}, {"G((1-lambda)K+lambda L+(-1,1)^n)", gm}};
    v.lhs = RadicalSum::root(1 - lambda, Rational(gk), n) + RadicalSum::root(lambda, Rational(gl), n);
    v.rhs = RadicalSum::root(1, Rational(gm), n);
    detail::decide(v, options);
    return v;
}

/// G(K-K) <= C(2n,n) G(K + (-3/4,3/4)^n).
inline Verdict check_rs_diff_cube34(const RationalPolytope& k, const CheckOptions& options = {}) {
    const unsigned long n = k.dim();
    Verdict v = detail::start("rs_diff_cube34", {{"K", to_json(k)}});
    const RationalPolytope ks = simplified(k);
    Integer diff = detail::count_base(minkowski_sum(ks, negate(ks)));
    Integer dil = detail::count_dilated(ks, make_rational(3, 4));
    v.counts = {{"G(K-K)", diff}, {"G(K+(-3/4,3/4)^n)", dil}};
    v.lhs = RadicalSum::rational(Rational(diff));
    v.rhs = RadicalSum::rational(Rational(binomial(2 * n, n) * dil));
    detail::decide(v, options);
    return v;
}

/// The undilated form G(K-K) <= C(2n,n) G(K), which fails on small cubes.
/// Kept to document why the dilation is needed.
inline Verdict check_rs_diff_classical(const RationalPolytope& k, const CheckOptions& options = {}) {
    const unsigned long n = k.dim();
    Verdict v = detail::start("rs_diff_classical", {{"K", to_json(k)}});
    const RationalPolytope ks = simplified(k);
    Integer diff = detail::count_base(minkowski_sum(ks, negate(ks)));
    Integer gk = detail::count_base(ks);
    v.counts = {{"G(K-K)", diff}, {"G(K)", gk}, {"C(2n,n)", binomial(2 * n, n)}};
    v.lhs = RadicalSum::rational(Rational(diff));
    v.rhs = RadicalSum::rational(Rational(binomial(2 * n, n) * gk));
    detail::decide(v, options);
    return v;
}

/// vol(M + [-1/2,1/2]^n) / vol(M + [-1,1]^n) for M = K + L, exactly.
inline Rational cube_ratio_exact(const RationalPolytope& sum) {
    return exact_volume_dilated(sum, make_rational(1, 2)) / exact_volume_dilated(sum, Rational(1));
}

/// G(K+L) G(K cap (-L)) <= C(2n,n) c_{K,L} G(K+(-1,1)^n) G(L+(-1,1)^n).
inline Verdict check_rs_sum(const RationalPolytope& k, const RationalPolytope& l, const CheckOptions& options = {},
                            std::string id = "rs_sum") {
    if (k.dim() != l.dim()) throw std::invalid_argument("check_rs_sum: dimension mismatch");
    const unsigned long n = k.dim();
    Verdict v = detail::start(std::move(id), {{"K", to_json(k)}, {"L", to_json(l)}});
    const RationalPolytope ks = simplified(k), ls = simplified(l);
    const RationalPolytope sum = simplified(minkowski_sum(ks, ls));
    Integer g_sum = detail::count_base(sum);
    Integer g_cap = lattice_count(Region::intersect(Region::base(ks), Region::base(negate(ls))));
    Integer gk = detail::count_dilated(ks, 1), gl = detail::count_dilated(ls, 1);
    v.counts = {{"G(K+L)", g_sum}, {"G(K cap -L)", g_cap}, {"G(K+(-1,1)^n)", gk}, {"G(L+(-1,1)^n)", gl}};
    const Rational lhs = Rational(g_sum * g_cap);
    const Rational base = Rational(binomial(2 * n, n) * gk * gl);
    v.lhs = RadicalSum::rational(lhs);
    if (options.exact_volumes) {
        Rational half = exact_volume_dilated(sum, make_rational(1, 2));
        Rational one = exact_volume_dilated(sum, Rational(1));
        v.volumes = {{"vol(K+L+[-1/2,1/2]^n)", {half, half, 1, true}}, {"vol(K+L+[-1,1]^n)", {one, one, 1, true}}};
        v.rhs = RadicalSum::rational(base * half / one);
        detail::decide(v, options);
        return v;
    }
    // Certified ratio bounds from cell counting, refined until decisive.
    for (unsigned r = 8;; r *= 2) {
        if (r > options.resolution_cap) r = options.resolution_cap;
        VolumeInterval num = volume_bounds(Region::dilate(sum, make_rational(1, 2), Openness::Closed), r, VolumeMode::CellsOnly);
        VolumeInterval den = volume_bounds(Region::dilate(sum, Rational(1), Openness::Closed), r, VolumeMode::CellsOnly);
        v.volumes = {{"vol(K+L+[-1/2,1/2]^n)", num}, {"vol(K+L+[-1,1]^n)", den}};
        const Rational c_lo = den.hi > 0 ? Rational(num.lo / den.hi) : Rational(0);
        const Rational c_hi = den.lo > 0 ? Rational(num.hi / den.lo) : Rational(1);
        v.rhs = RadicalSum::rational(base * c_lo);
        if (lhs <= base * c_lo) {
            v.outcome = Outcome::HoldsStrict;
            return v;
        }
        if (lhs > base * c_hi) {
            v.outcome = Outcome::Violated;
            return v;
        }
        if (r == options.resolution_cap) {
            v.outcome = Outcome::Indeterminate;
            return v;
        }
    }
}

/// check_rs_sum with L = -K, for 0 in K: G(K-K) G(K) <= C(2n,n) c_{K,-K} G(K+(-1,1)^n)^2.
inline Verdict check_rs_diff_c(const RationalPolytope& k, const CheckOptions& options = {}) {
    detail::require_origin(k, "check_rs_diff_c");
    return check_rs_sum(k, negate(k), options, "rs_diff_c");
}

namespace detail {

inline std::vector<std::size_t> default_section(std::size_t k) {
    std::vector<std::size_t> h;
    for (std::size_t i = 0; i < k; ++i) h.push_back(i);
    return h;
}

struct ProjSecCounts {
    Integer projection, section, dilated;
};

inline ProjSecCounts projsec_counts(const RationalPolytope& k, const std::vector<std::size_t>& h) {
    const std::size_t n = k.dim();
    if (h.empty() || h.size() >= n) throw std::domain_error("projsec: need 1 <= k <= n-1");
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(h.begin(), h.end(), i) == h.end()) complement.push_back(i);
    if (complement.size() + h.size() != n) throw std::domain_error("projsec: bad coordinate subspace");
    const RationalPolytope ks = simplified(k);
    ProjSecCounts c;
    c.projection = count_base(project_coords(ks, complement));
    c.section = lattice_count(Region::base(ks).with_slice({h}));
    c.dilated = count_dilated(ks, 1);
    return c;
}

inline Json projsec_witness(const RationalPolytope& k, const std::vector<std::size_t>& h) {
    return {{"K", to_json(k)}, {"H", h}};
}

}  // namespace detail

/// G_{n-k}(P_{H^perp} K) G_k(K cap H) <= C(n,k) G(K+(-1,1)^n) for a
/// coordinate subspace H (default: the first k coordinates).
inline Verdict check_projsec(const RationalPolytope& k, std::size_t dim_h,
                             std::optional<std::vector<std::size_t>> coords = std::nullopt,
                             const CheckOptions& options = {}) {
    const std::vector<std::size_t> h = coords ? *coords : detail::default_section(dim_h);
    if (h.size() != dim_h) throw std::invalid_argument("check_projsec: coordinate set size differs from k");
    Verdict v = detail::start("projsec", detail::projsec_witness(k, h));
    auto c = detail::projsec_counts(k, h);
    v.counts = {{"G_{n-k}(P K)", c.projection}, {"G_k(K cap H)", c.section}, {"G(K+(-1,1)^n)", c.dilated}};
    v.lhs = RadicalSum::rational(Rational(c.projection * c.section));
    v.rhs = RadicalSum::rational(Rational(binomial(k.dim(), dim_h) * c.dilated));
    detail::decide(v, options);
    return v;
}

/// [sum_{i=0}^{n-k} k/(n-i) C(n-k,i)/C(n,i) G_{n-k}(P K)^{i/(n-k)}] G_k(K cap H) <= G(K+(-1,1)^n), 0 in K.
inline Verdict check_projsec_refined(const RationalPolytope& k, std::size_t dim_h,
                                     std::optional<std::vector<std::size_t>> coords = std::nullopt,
                                     const CheckOptions& options = {}) {
    detail::require_origin(k, "check_projsec_refined");
    const std::vector<std::size_t> h = coords ? *coords : detail::default_section(dim_h);
    if (h.size() != dim_h) throw std::invalid_argument("check_projsec_refined: coordinate set size differs from k");
    const unsigned long n = k.dim(), kk = dim_h, m = n - kk;
    Verdict v = detail::start("projsec_refined", detail::projsec_witness(k, h));
    auto c = detail::projsec_counts(k, h);
    v.counts = {{"G_{n-k}(P K)", c.projection}, {"G_k(K cap H)", c.section}, {"G(K+(-1,1)^n)", c.dilated}};
    for (unsigned long i = 0; i <= m; ++i) {
        Rational coefficient = make_rational(static_cast<long>(kk), static_cast<long>(n - i)) *
                               Rational(binomial(m, i)) / Rational(binomial(n, i)) * Rational(c.section);
        v.lhs += RadicalSum::root(coefficient, pow(Rational(c.projection), i), static_cast<unsigned>(m));
    }
    v.rhs = RadicalSum::rational(Rational(c.dilated));
    detail::decide(v, options);
    return v;
}

/// G(K+L) G(K cap (-L)) <= C(2n,n) G(K+(-1,1)^n) G(L+(-2,2)^n), 0 in K and L.
inline Verdict check_rs_weak(const RationalPolytope& k, const RationalPolytope& l, const CheckOptions& options = {}) {
    if (k.dim() != l.dim()) throw std::invalid_argument("check_rs_weak: dimension mismatch");
    detail::require_origin(k, "check_rs_weak");
    detail::require_origin(l, "check_rs_weak");
    const unsigned long n = k.dim();
    Verdict v = detail::start("rs_weak", {{"K", to_json(k)}, {"L", to_json(l)}});
    const RationalPolytope ks = simplified(k), ls = simplified(l);
    Integer g_sum = detail::count_base(minkowski_sum(ks, ls));
    Integer g_cap = lattice_count(Region::intersect(Region::base(ks), Region::base(negate(ls))));
    Integer gk = detail::count_dilated(ks, 1), gl = detail::count_dilated(ls, 2);
    v.counts = {{"G(K+L)", g_sum}, {"G(K cap -L)", g_cap}, {"G(K+(-1,1)^n)", gk}, {"G(L+(-2,2)^n)", gl}};
    v.lhs = RadicalSum::rational(Rational(g_sum * g_cap));
    v.rhs = RadicalSum::rational(Rational(binomial(2 * n, n) * gk * gl));
    detail::decide(v, options);
    return v;
}

namespace detail {

// sum_{i=0}^n n/(2n-i) C(n,i)/C(2n,i) * factor * base^(i/n)
inline RadicalSum covariogram_sum(unsigned long n, const Integer& base, const Rational& factor) {
    RadicalSum s;
    for (unsigned long i = 0; i <= n; ++i) {
        Rational coefficient = make_rational(static_cast<long>(n), static_cast<long>(2 * n - i)) *
                               Rational(binomial(n, i)) / Rational(binomial(2 * n, i)) * factor;
        s += RadicalSum::root(coefficient, pow(Rational(base), i), static_cast<unsigned>(n));
    }
    return s;
}

}  // namespace detail

/// [sum_i n/(2n-i) C(n,i)/C(2n,i) G((K+L)~(-1,1)^n)^{i/n}] G(K cap ((-L)~(-1,1)^n))
///   <= G(K+(-1,1)^n) G(L+(-1,1)^n),  for 0 in K and [-1,1]^n inside L.
inline Verdict check_rs_diff_refined(const RationalPolytope& k, const RationalPolytope& l,
                                     const CheckOptions& options = {}) {
    if (k.dim() != l.dim()) throw std::invalid_argument("check_rs_diff_refined: dimension mismatch");
    detail::require_origin(k, "check_rs_diff_refined");
    const std::size_t n = k.dim();
    const RationalPolytope unit = RationalPolytope::cube(n, 1);
    for (const auto& corner : unit.generators())
        if (!contains(l, corner)) throw std::domain_error("check_rs_diff_refined: L must contain [-1,1]^n");
    Verdict v = detail::start("rs_diff_refined", {{"K", to_json(k)}, {"L", to_json(l)}});
    const RationalPolytope ks = simplified(k), ls = simplified(l);
    Integer eroded_sum = lattice_count(Region::erode(simplified(minkowski_sum(ks, ls)), Rational(1)));
    Integer cap = lattice_count(Region::intersect(Region::base(ks), Region::erode(negate(ls), Rational(1))));
    Integer gk = detail::count_dilated(ks, 1), gl = detail::count_dilated(ls, 1);
    v.counts = {{"G((K+L)~(-1,1)^n)", eroded_sum},
                {"G(K cap ((-L)~(-1,1)^n))", cap},
                {"G(K+(-1,1)^n)", gk},
                {"G(L+(-1,1)^n)", gl}};
    v.lhs = detail::covariogram_sum(n, eroded_sum, Rational(cap));
    v.rhs = RadicalSum::rational(Rational(gk * gl));
    detail::decide(v, options);
    return v;
}

/// [sum_i n/(2n-i) C(n,i)/C(2n,i) G(K-K)^{i/n}] G(K) <= G(K+(-1,1)^n) G(K+(-2,2)^n), 0 in K.
inline Verdict check_rs_diff_refined_sums(const RationalPolytope& k, const CheckOptions& options = {}) {
    detail::require_origin(k, "check_rs_diff_refined_sums");
    const std::size_t n = k.dim();
    Verdict v = detail::start("rs_diff_refined_sums", {{"K", to_json(k)}});
    const RationalPolytope ks = simplified(k);
    Integer diff = detail::count_base(minkowski_sum(ks, negate(ks)));
    Integer gk = detail::count_base(ks);
    Integer g1 = detail::count_dilated(ks, 1), g2 = detail::count_dilated(ks, 2);
    v.counts = {{"G(K-K)", diff}, {"G(K)", gk}, {"G(K+(-1,1)^n)", g1}, {"G(K+(-2,2)^n)", g2}};
    v.lhs = detail::covariogram_sum(n, diff, Rational(gk));
    v.rhs = RadicalSum::rational(Rational(g1 * g2));
    detail::decide(v, options);
    return v;
}

/// G(K+(-1,1)^2) + 1/2 + 1/3 G(K-K)^{1/2} < G(K+(-2,2)^2), planar K with 0 in K.
inline Verdict check_planar_comparison(const RationalPolytope& k, const CheckOptions& options = {}) {
    if (k.dim() != 2) throw std::domain_error("check_planar_comparison: K must be planar");
    detail::require_origin(k, "check_planar_comparison");
    Verdict v = detail::start("planar_comparison", {{"K", to_json(k)}});
    v.strict = true;
    const RationalPolytope ks = simplified(k);
    Integer g1 = detail::count_dilated(ks, 1), g2 = detail::count_dilated(ks, 2);
    Integer diff = detail::count_base(minkowski_sum(ks, negate(ks)));
    v.counts = {{"G(K+(-1,1)^2)", g1}, {"G(K+(-2,2)^2)", g2}, {"G(K-K)", diff}};
    v.lhs = RadicalSum::rational(Rational(g1) + make_rational(1, 2)) + RadicalSum::root(make_rational(1, 3), Rational(diff), 2);
    v.rhs = RadicalSum::rational(Rational(g2));
    detail::decide(v, options);
    return v;
}

/// Compares c_{K,-K} G(K+(-1,1)^n)^2 / G(K) with G(K+(-3/4,3/4)^n) for
/// K = [-r,r]^n. The verdict is arranged so that "holds" means the expected
/// direction: "<" for integer r, ">" otherwise.
struct CubeComparison {
    Rational r;
    std::size_t n = 0;
    Rational c;            ///< c_{K,-K}
    Rational sum_side;     ///< c_{K,-K} G(K+(-1,1)^n)^2 / G(K)
    Integer cube34_side;   ///< G(K+(-3/4,3/4)^n)
    char direction = '=';  ///< sign of sum_side - cube34_side
    char expected = '<';
    Verdict verdict;
};

inline CubeComparison check_cube_noncomparability(const Rational& r, std::size_t n, const CheckOptions& options = {}) {
    if (r <= 0) throw std::domain_error("check_cube_noncomparability: r must be positive");
    if (n == 0) throw std::domain_error("check_cube_noncomparability: n must be positive");
    const RationalPolytope k = RationalPolytope::cube(n, r);
    CubeComparison out;
    out.r = r;
    out.n = n;
    // K - K = [-2r,2r]^n, so both volumes are products of side lengths.
    out.c = pow(Rational((4 * r + 1) / (4 * r + 2)), n);
    const Rational vol_half = pow(Rational(4 * r + 1), n), vol_one = pow(Rational(4 * r + 2), n);
    Integer gk = detail::count_base(k), g1 = detail::count_dilated(k, 1), g34 = detail::count_dilated(k, make_rational(3, 4));
    out.sum_side = out.c * Rational(g1 * g1) / Rational(gk);
    out.cube34_side = g34;
    out.direction = out.sum_side < Rational(g34) ? '<' : (out.sum_side > Rational(g34) ? '>' : '=');
    out.expected = is_integer(r) ? '<' : '>';
    Verdict& v = out.verdict;
    v = detail::start("cube_noncomparability", {{"r", to_string(r)}, {"n", n}});
    v.strict = true;
    v.counts = {{"G(K)", gk}, {"G(K+(-1,1)^n)", g1}, {"G(K+(-3/4,3/4)^n)", g34}};
    v.volumes = {{"vol(K-K+[-1/2,1/2]^n)", {vol_half, vol_half, 1, true}},
                 {"vol(K-K+[-1,1]^n)", {vol_one, vol_one, 1, true}}};
    v.side_assertions = {{"c_{K,-K} matches volume ratio", out.c == vol_half / vol_one &&
                                                              out.c == cube_ratio_exact(minkowski_sum(k, negate(k)))}};
    RadicalSum a = RadicalSum::rational(out.sum_side), b = RadicalSum::rational(Rational(g34));
    v.lhs = out.expected == '<' ? a : b;
    v.rhs = out.expected == '<' ? b : a;
    detail::decide(v, options);
    return out;
}

/// G(P-P) <= 6 G(P) - b(P) - 5 for a nondegenerate lattice polygon, with
/// Pick's identity area = G(P) - b(P)/2 - 1 as a side assertion.
inline Verdict check_gg_planar(const LatticePolygon& p, const CheckOptions& options = {}) {
    if (p.degenerate()) throw std::domain_error("check_gg_planar: degenerate polygon");
    const RationalPolytope body = p.as_polytope();
    Verdict v = detail::start("gg_planar", {{"P", to_json(body)}});
    Integer diff = detail::count_base(minkowski_sum(body, negate(body)));
    Integer g = detail::count_base(body);
    Integer b = boundary_lattice_count(p);
    Rational area = area_2d(p.hull());
    v.counts = {{"G(P-P)", diff}, {"G(P)", g}, {"b(P)", b}};
    v.volumes = {{"area(P)", {area, area, 1, true}}};
    v.side_assertions = {{"Pick: area = G - b/2 - 1", area == Rational(g) - Rational(b) / 2 - 1}};
    v.lhs = RadicalSum::rational(Rational(diff));
    v.rhs = RadicalSum::rational(Rational(6 * g - b - 5));
    detail::decide(v, options);
    return v;
}

/// Discrete Berwald, cross-powered:
///   (C(n+q,n) A / G(K))^p <= (C(n+p,n) B / G(K))^q
/// with A = sum over K of f^q and B = sum over K+(-1,1)^n of f_diamond^p.
inline Verdict check_berwald(const ConcavePWA& f, unsigned long p, unsigned long q, const CheckOptions& options = {}) {
    if (!(0 < p && p < q)) throw std::domain_error("check_berwald: need 0 < p < q");
    if (!validate(f)) throw std::domain_error("check_berwald: f fails the hypotheses");
    const unsigned long n = f.dim();
    Verdict v = detail::start("berwald", {{"f", to_json(f)}, {"p", p}, {"q", q}});
    Integer g = detail::count_base(f.domain());
    Rational a = power_sum(f, q, SumDomain::DomainLattice);
    Rational b = power_sum(f, p, SumDomain::DiamondLattice);
    v.counts = {{"G(K)", g}};
    v.values = {{"sum f^q over K", a}, {"sum f_diamond^p over K+(-1,1)^n", b}};
    v.lhs = RadicalSum::rational(pow(Rational(binomial(n + q, n)) * a / Rational(g), p));
    v.rhs = RadicalSum::rational(pow(Rational(binomial(n + p, n)) * b / Rational(g), q));
    detail::decide(v, options);
    return v;
}

/// G(K) m^p <= C(n+p,n) sum over (K+(-1,1)^n) of h_m^p, 0 in K.
inline Verdict check_hm_lemma(const RationalPolytope& k, const Rational& m, unsigned long p,
                              const CheckOptions& options = {}) {
    if (p == 0) throw std::domain_error("check_hm_lemma: p must be positive");
    ConeFunction h(k, m);
    const unsigned long n = k.dim();
    Verdict v = detail::start("hm_lemma", {{"K", to_json(k)}, {"m", to_string(m)}, {"p", p}});
    const RationalPolytope ks = simplified(k);
    Integer g = detail::count_base(ks);
    Rational total = 0;
    Integer points = 0;
    CompiledRegion(Region::dilate(ks, Rational(1), Openness::Open)).for_each_lattice_point([&](const Point& z) {
        total += pow(h(z), p);
        ++points;
    });
    v.counts = {{"G(K)", g}, {"G(K+(-1,1)^n)", points}};
    v.values = {{"sum h_m^p over K+(-1,1)^n", total}};
    v.lhs = RadicalSum::rational(Rational(g) * pow(m, p));
    v.rhs = RadicalSum::rational(Rational(binomial(n + p, n)) * total);
    detail::decide(v, options);
    return v;
}

}  // namespace lpe
