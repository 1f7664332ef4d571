#pragma once

// Exact rational linear programming: two-phase dense-tableau simplex with
// Bland's anti-cycling rule. Intended for the small systems that arise from
// convex-combination membership tests (a few rows, tens of columns).

#include "lpe/rational.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lpe {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearConstraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::LessEq;
    Rational bound;
};

struct LinearProgram {
    std::size_t num_variables = 0;
    std::vector<Rational> objective;  ///< empty means the zero objective
    Sense sense = Sense::Maximize;
    std::vector<LinearConstraint> constraints;
    std::vector<bool> nonnegative;  ///< per variable; empty means all nonnegative

    explicit LinearProgram(std::size_t variables = 0) : num_variables(variables) {}

    void add(std::vector<Rational> coefficients, Relation relation, Rational bound) {
        if (coefficients.size() != num_variables)
            throw std::invalid_argument("LinearProgram: constraint width mismatch");
        constraints.push_back({std::move(coefficients), relation, std::move(bound)});
    }
};

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Rational optimal_value;
    std::vector<Rational> witness;

    bool feasible() const { return status != LpStatus::Infeasible; }
};

namespace detail {

class SimplexTableau {
public:
    // rows_[i] holds the coefficients of row i followed by its right-hand side.
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> basis;
    std::size_t columns = 0;

    void pivot(std::size_t r, std::size_t c) {
        std::vector<Rational>& prow = rows[r];
        Rational inv = 1 / prow[c];
        for (auto& v : prow)
            if (sgn(v) != 0) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            std::vector<Rational>& row = rows[i];
            if (sgn(row[c]) == 0) continue;
            Rational factor = row[c];
            for (std::size_t j = 0; j <= columns; ++j)
                if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
        }
        basis[r] = c;
    }

    // Maximizes cost . x over the current basis; columns >= allowed are never
    // entered. Returns false on unboundedness.
    bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
        for (;;) {
            // Reduced cost of column j: cost_j - sum_i cost_{basis_i} * a_ij.
            std::size_t entering = columns;
            for (std::size_t j = 0; j < allowed && entering == columns; ++j) {
                if (is_basic(j)) continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (sgn(rows[i][j]) != 0 && sgn(cost[basis[i]]) != 0) reduced -= cost[basis[i]] * rows[i][j];
                if (reduced > 0) entering = j;
            }
            if (entering == columns) return true;
            std::size_t leaving = rows.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][entering] <= 0) continue;
                Rational ratio = rows[i][columns] / rows[i][entering];
                if (leaving == rows.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows.size()) return false;
            pivot(leaving, entering);
        }
    }

    bool is_basic(std::size_t j) const {
        for (auto b : basis)
            if (b == j) return true;
        return false;
    }

    Rational value_of(std::size_t column) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (basis[i] == column) return rows[i][columns];
        return Rational(0);
    }
};

}  // namespace detail

/// Solves lp exactly. Free variables are split into differences of
/// nonnegative parts; the returned witness satisfies every constraint
/// exactly.
inline LpOutcome solve(const LinearProgram& lp) {
    const std::size_t n = lp.num_variables;
    if (!lp.objective.empty() && lp.objective.size() != n)
        throw std::invalid_argument("LinearProgram: objective width mismatch");
    if (!lp.nonnegative.empty() && lp.nonnegative.size() != n)
        throw std::invalid_argument("LinearProgram: nonnegativity flags width mismatch");
    for (const auto& c : lp.constraints)
        if (c.coefficients.size() != n) throw std::invalid_argument("LinearProgram: constraint width mismatch");

    // Structural columns: one per nonnegative variable, two per free one.
    std::vector<std::size_t> pos_col(n), neg_col(n, std::numeric_limits<std::size_t>::max());
    std::size_t structural = 0;
    for (std::size_t v = 0; v < n; ++v) {
        pos_col[v] = structural++;
        if (!lp.nonnegative.empty() && !lp.nonnegative[v]) neg_col[v] = structural++;
    }
    const std::size_t m = lp.constraints.size();
    std::size_t slack_count = 0;
    for (const auto& c : lp.constraints)
        if (c.relation != Relation::Equal) ++slack_count;

    // Column layout: structural | slacks | artificials.
    const std::size_t slack_begin = structural;
    const std::size_t artificial_begin = slack_begin + slack_count;
    const std::size_t columns = artificial_begin + m;

    detail::SimplexTableau t;
    t.columns = columns;
    t.rows.assign(m, std::vector<Rational>(columns + 1));
    t.basis.assign(m, 0);

    std::size_t next_slack = slack_begin;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        bool flip = c.bound < 0;
        Rational sign = flip ? -1 : 1;
        auto& row = t.rows[i];
        for (std::size_t v = 0; v < n; ++v) {
            if (sgn(c.coefficients[v]) == 0) continue;
            row[pos_col[v]] = sign * c.coefficients[v];
            if (neg_col[v] != std::numeric_limits<std::size_t>::max()) row[neg_col[v]] = -row[pos_col[v]];
        }
        row[columns] = sign * c.bound;
        if (c.relation != Relation::Equal) {
            Rational slack_sign = c.relation == Relation::LessEq ? 1 : -1;
            row[next_slack++] = sign * slack_sign;
        }
        row[artificial_begin + i] = 1;
        t.basis[i] = artificial_begin + i;
    }
    // Rows whose slack has coefficient +1 can start from the slack instead.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t s = slack_begin; s < artificial_begin; ++s) {
            if (t.rows[i][s] == 1) {
                bool only_row = true;
                for (std::size_t r = 0; r < m && only_row; ++r)
                    if (r != i && sgn(t.rows[r][s]) != 0) only_row = false;
                if (only_row) {
                    t.rows[i][artificial_begin + i] = 0;
                    t.basis[i] = s;
                }
                break;
            }
        }
    }

    // Phase 1: maximize -(sum of artificials).
    std::vector<Rational> phase1(columns, Rational(0));
    for (std::size_t a = artificial_begin; a < columns; ++a) phase1[a] = -1;
    t.optimize(phase1, columns);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= artificial_begin && sgn(t.rows[i][columns]) != 0) return LpOutcome{};

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < artificial_begin) {
            ++i;
            continue;
        }
        std::size_t replacement = columns;
        for (std::size_t j = 0; j < artificial_begin && replacement == columns; ++j)
            if (sgn(t.rows[i][j]) != 0) replacement = j;
        if (replacement != columns) {
            t.pivot(i, replacement);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2.
    std::vector<Rational> cost(columns, Rational(0));
    if (!lp.objective.empty()) {
        Rational dir = lp.sense == Sense::Maximize ? 1 : -1;
        for (std::size_t v = 0; v < n; ++v) {
            cost[pos_col[v]] = dir * lp.objective[v];
            if (neg_col[v] != std::numeric_limits<std::size_t>::max()) cost[neg_col[v]] = -cost[pos_col[v]];
        }
    }
    LpOutcome out;
    if (!t.optimize(cost, artificial_begin)) {
        out.status = LpStatus::Unbounded;
        return out;
    }
    out.status = LpStatus::Optimal;
    out.witness.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        out.witness[v] = t.value_of(pos_col[v]);
        if (neg_col[v] != std::numeric_limits<std::size_t>::max()) out.witness[v] -= t.value_of(neg_col[v]);
    }
    out.optimal_value = 0;
    if (!lp.objective.empty())
        for (std::size_t v = 0; v < n; ++v) out.optimal_value += lp.objective[v] * out.witness[v];
    return out;
}

/// True when x satisfies every constraint of lp exactly.
inline bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
    if (x.size() != lp.num_variables) return false;
    for (std::size_t v = 0; v < x.size(); ++v)
        if ((lp.nonnegative.empty() || lp.nonnegative[v]) && x[v] < 0) return false;
    for (const auto& c : lp.constraints) {
        Rational lhs = 0;
        for (std::size_t v = 0; v < x.size(); ++v) lhs += c.coefficients[v] * x[v];
        switch (c.relation) {
            case Relation::LessEq:
                if (lhs > c.bound) return false;
                break;
            case Relation::Equal:
                if (lhs != c.bound) return false;
                break;
            case Relation::GreaterEq:
                if (lhs < c.bound) return false;
                break;
        }
    }
    return true;
}

}  // namespace lpe
