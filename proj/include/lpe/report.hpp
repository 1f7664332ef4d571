#pragma once

// Verdict reports: JSON lines (one record per verdict), a plain-text
// summary table and CSV. Records are sorted by (check_id, digest) so the
// output bytes depend only on the set of verdicts.

#include "lpe/checks.hpp"
#include "lpe/radical.hpp"
#include "lpe/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace lpe {

inline Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

/// Fixed-point decimal with `digits` fractional digits, rounded toward zero.
inline std::string decimal_string(const Rational& q, unsigned digits = 6) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer scaled_abs;
    Integer num = abs(Integer(q.get_num())) * scale;
    mpz_tdiv_q(scaled_abs.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    std::string s = scaled_abs.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (q < 0 ? "-" : "") + s;
}

/// Midpoint of a 64-bit enclosure, as a decimal string.
inline std::string approx_string(const RadicalSum& s, unsigned digits = 6) {
    DyadicInterval e = s.enclose(64);
    return decimal_string((e.lo + e.hi) / 2, digits);
}

inline Json to_json(const RadicalSum& s) {
    Json terms = Json::array();
    for (const auto& t : s.terms())
        terms.push_back({{"coefficient", to_string(t.coefficient)},
                         {"radicand", to_string(t.radicand)},
                         {"root_index", t.root_index}});
    return {{"terms", terms}, {"approx_decimal", approx_string(s)}};
}

inline Json to_json(const Verdict& v) {
    Json counts = Json::object();
    for (const auto& c : v.counts) counts[c.name] = integer_to_json(c.value);
    Json volumes = Json::array();
    for (const auto& vol : v.volumes)
        volumes.push_back({{"name", vol.name},
                           {"lo", to_string(vol.interval.lo)},
                           {"hi", to_string(vol.interval.hi)},
                           {"resolution", vol.interval.resolution},
                           {"exact", vol.interval.exact}});
    Json values = Json::object();
    for (const auto& x : v.values) values[x.name] = to_string(x.value);
    Json sides = Json::object();
    for (const auto& s : v.side_assertions) sides[s.name] = s.ok;
    return {{"check_id", v.check_id},
            {"digest", v.digest()},
            {"relation", v.relation()},
            {"outcome", to_string(v.outcome)},
            {"precision_bits", v.precision_bits},
            {"expected_violation", v.expected_violation},
            {"lhs", to_json(v.lhs)},
            {"rhs", to_json(v.rhs)},
            {"counts", counts},
            {"volumes", volumes},
            {"values", values},
            {"side_assertions", sides},
            {"witness", v.witness}};
}

inline std::vector<const Verdict*> canonical_order(const std::vector<Verdict>& verdicts) {
    std::vector<std::pair<std::pair<std::string, std::string>, const Verdict*>> keyed;
    for (const auto& v : verdicts) keyed.push_back({{v.check_id, v.digest()}, &v});
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<const Verdict*> out;
    for (const auto& k : keyed) out.push_back(k.second);
    return out;
}

inline std::string render_records(const std::vector<Verdict>& verdicts) {
    std::string out;
    for (const Verdict* v : canonical_order(verdicts)) out += to_json(*v).dump() + "\n";
    return out;
}

inline std::string render_csv(const std::vector<Verdict>& verdicts) {
    std::string out = "check_id,digest,relation,outcome,precision_bits,expected_violation,lhs_approx,rhs_approx\n";
    for (const Verdict* v : canonical_order(verdicts)) {
        out += v->check_id + "," + v->digest() + "," + v->relation() + "," + to_string(v->outcome) + "," +
               std::to_string(v->precision_bits) + "," + (v->expected_violation ? "true" : "false") + "," +
               approx_string(v->lhs) + "," + approx_string(v->rhs) + "\n";
    }
    return out;
}

struct OutcomeTally {
    std::size_t total = 0, strict = 0, equality = 0, indeterminate = 0, violated = 0, expected = 0;
};

inline std::map<std::string, OutcomeTally> tally(const std::vector<Verdict>& verdicts) {
    std::map<std::string, OutcomeTally> t;
    for (const auto& v : verdicts) {
        auto& row = t[v.check_id];
        ++row.total;
        if (v.expected_violation) ++row.expected;
        switch (v.outcome) {
            case Outcome::HoldsStrict: ++row.strict; break;
            case Outcome::HoldsEquality: ++row.equality; break;
            case Outcome::Indeterminate: ++row.indeterminate; break;
            case Outcome::Violated: ++row.violated; break;
        }
    }
    return t;
}

/// Human-readable table; decimal columns are approximations (marked "~").
inline std::string render_summary(const std::vector<Verdict>& verdicts) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %6s %8s %8s %8s %8s %8s\n", "check", "total", "strict", "equal",
                  "indet", "VIOLATED", "expected");
    os << line;
    for (const auto& [id, t] : tally(verdicts)) {
        std::snprintf(line, sizeof line, "%-22s %6zu %8zu %8zu %8zu %8zu %8zu\n", id.c_str(), t.total, t.strict,
                      t.equality, t.indeterminate, t.violated, t.expected);
        os << line;
    }
    bool header = false;
    for (const Verdict* v : canonical_order(verdicts)) {
        if (!v->expected_violation) continue;
        if (!header) {
            os << "\nexpected failures (undilated forms):\n";
            header = true;
        }
        os << "  " << v->check_id << " " << v->digest() << ": lhs ~" << approx_string(v->lhs, 3) << " "
           << v->relation() << " rhs ~" << approx_string(v->rhs, 3) << " -> " << to_string(v->outcome)
           << (v->outcome == Outcome::Violated ? " (EXPECTED)" : " (UNEXPECTED)") << "\n";
    }
    return os.str();
}

}  // namespace lpe
