#pragma once

// Scaling studies: lattice counts of rK for growing r, with the ratios
// whose limits are the continuous volume inequalities.
//
//   volume          G(rK) / r^n                                   -> vol(K)
//   rs_diff_cube34  G(r(K-K)) / G(rK + (-3/4,3/4)^n)              <= C(2n,n)
//   projsec         G_{n-k}(P rK) G_k(rK cap H) / G(rK+(-1,1)^n)  <= C(n,k)
//   rs_weak         G(r(K+L)) G(rK cap -rL) /
//                   (G(rK+(-1,1)^n) G(rL+(-2,2)^n))               <= C(2n,n)
//
// slack = bound - ratio.

#include "lpe/checks.hpp"
#include "lpe/polytope.hpp"
#include "lpe/rational.hpp"
#include "lpe/region.hpp"
#include "lpe/report.hpp"
#include "lpe/volume.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpe {

struct AsymptoticTable {
    std::string study;
    std::vector<std::string> columns;            ///< exact columns, "p/q"
    std::vector<std::vector<Rational>> rows;
    std::vector<std::string> approx_columns;     ///< decimal approximations of these columns
    bool degenerate = false;                     ///< K is not full-dimensional

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::out_of_range("AsymptoticTable: no column " + name);
    }

    Rational at(std::size_t row, const std::string& name) const { return rows.at(row).at(column(name)); }
};

inline std::vector<std::string> asymptotic_study_ids() { return {"volume", "rs_diff_cube34", "projsec", "rs_weak"}; }

inline AsymptoticTable asymptotic_study(const RationalPolytope& k, const std::optional<RationalPolytope>& l,
                                        const std::string& id, const std::vector<unsigned>& schedule,
                                        std::size_t section_dim = 1) {
    const std::size_t n = k.dim();
    const RationalPolytope ks = simplified(k);
    AsymptoticTable t;
    t.study = id;
    t.degenerate = exact_volume(ks) == 0;
    auto count = [](const Region& r) { return Rational(lattice_count(r)); };
    for (unsigned r : schedule) {
        if (r == 0) throw std::invalid_argument("asymptotic_study: schedule entries must be positive");
    }
    if (id == "volume") {
        t.columns = {"r", "G(rK)", "G(rK)/r^n", "vol(K)"};
        t.approx_columns = {"G(rK)/r^n"};
        const Rational vol = exact_volume(ks);
        for (unsigned r : schedule) {
            Rational g = count(Region::base(scale(ks, Rational(r))));
            t.rows.push_back({Rational(r), g, g / pow(Rational(r), n), vol});
        }
    } else if (id == "rs_diff_cube34") {
        t.columns = {"r", "G(r(K-K))", "G(rK+(-3/4,3/4)^n)", "ratio", "bound", "slack"};
        t.approx_columns = {"ratio", "slack"};
        const Rational bound(binomial(2 * n, n));
        const RationalPolytope diff = simplified(minkowski_sum(ks, negate(ks)));
        for (unsigned r : schedule) {
            Rational a = count(Region::base(scale(diff, Rational(r))));
            Rational b = count(Region::dilate(scale(ks, Rational(r)), make_rational(3, 4), Openness::Open));
            Rational ratio = a / b;
            t.rows.push_back({Rational(r), a, b, ratio, bound, bound - ratio});
        }
    } else if (id == "projsec") {
        if (section_dim == 0 || section_dim >= n) throw std::domain_error("asymptotic_study: need 1 <= k <= n-1");
        t.columns = {"r", "G_{n-k}(P rK)", "G_k(rK cap H)", "G(rK+(-1,1)^n)", "ratio", "bound", "slack"};
        t.approx_columns = {"ratio", "slack"};
        const Rational bound(binomial(n, section_dim));
        std::vector<std::size_t> h, rest;
        for (std::size_t i = 0; i < n; ++i) (i < section_dim ? h : rest).push_back(i);
        for (unsigned r : schedule) {
            RationalPolytope kr = scale(ks, Rational(r));
            Rational a = count(Region::base(project_coords(kr, rest)));
            Rational b = count(Region::base(kr).with_slice({h}));
            Rational c = count(Region::dilate(kr, Rational(1), Openness::Open));
            Rational ratio = a * b / c;
            t.rows.push_back({Rational(r), a, b, c, ratio, bound, bound - ratio});
        }
    } else if (id == "rs_weak") {
        const RationalPolytope ls = simplified(l ? *l : negate(k));
        if (ls.dim() != n) throw std::invalid_argument("asymptotic_study: dimension mismatch");
        t.columns = {"r", "G(r(K+L))", "G(rK cap -rL)", "G(rK+(-1,1)^n)", "G(rL+(-2,2)^n)", "ratio", "bound", "slack"};
        t.approx_columns = {"ratio", "slack"};
        const Rational bound(binomial(2 * n, n));
        const RationalPolytope sum = simplified(minkowski_sum(ks, ls));
        for (unsigned r : schedule) {
            const Rational rr(r);
            Rational a = count(Region::base(scale(sum, rr)));
            Rational b = count(Region::intersect(Region::base(scale(ks, rr)), Region::base(negate(scale(ls, rr)))));
            Rational c = count(Region::dilate(scale(ks, rr), Rational(1), Openness::Open));
            Rational d = count(Region::dilate(scale(ls, rr), Rational(2), Openness::Open));
            Rational ratio = a * b / (c * d);
            t.rows.push_back({rr, a, b, c, d, ratio, bound, bound - ratio});
        }
    } else {
        throw std::invalid_argument("asymptotic_study: unknown study '" + id + "'");
    }
    return t;
}

/// CSV with exact "p/q" columns followed by "<name>_approx" decimal columns
/// and the degenerate flag.
inline std::string render_csv(const AsymptoticTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
    for (const auto& a : t.approx_columns) out += "," + a + "_approx";
    out += ",degenerate\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + to_string(row[i]);
        for (const auto& a : t.approx_columns) out += "," + decimal_string(row[t.column(a)], 6);
        out += t.degenerate ? ",true\n" : ",false\n";
    }
    return out;
}

}  // namespace lpe
