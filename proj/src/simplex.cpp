#include "groupfair/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace groupfair {

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> rows;  // each row: columns then rhs
    std::vector<Rational> z;                  // reduced-cost row, same width
    std::vector<int> basis;                   // basic variable per row
    int columns = 0;                          // excludes rhs

    Rational& rhs(int r) { return rows[r][columns]; }

    void pivot(int r, int c) {
        const Rational p = rows[r][c];
        for (auto& v : rows[r]) v /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            const Rational factor = rows[i][c];
            if (factor == 0) continue;
            for (int j = 0; j <= columns; ++j) rows[i][j] -= factor * rows[r][j];
        }
        const Rational zf = z[c];
        if (zf != 0) {
            for (int j = 0; j <= columns; ++j) z[j] -= zf * rows[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule: smallest improving column, smallest basic index on ratio
    // ties. Returns false when optimal; throws on unboundedness.
    bool step() {
        int entering = -1;
        for (int j = 0; j < columns; ++j) {
            if (z[j] > 0) {
                entering = j;
                break;
            }
        }
        if (entering < 0) return false;
        int leaving = -1;
        Rational best;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][entering] <= 0) continue;
            const Rational ratio = rows[r][columns] / rows[r][entering];
            if (leaving < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leaving])) {
                leaving = static_cast<int>(r);
                best = ratio;
            }
        }
        if (leaving < 0) throw std::runtime_error("lp unbounded");
        pivot(leaving, entering);
        return true;
    }

    void price_out(const std::vector<Rational>& costs) {
        z.assign(columns + 1, Rational(0));
        for (int j = 0; j < static_cast<int>(costs.size()); ++j) z[j] = costs[j];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const int b = basis[r];
            if (b < static_cast<int>(costs.size()) && costs[b] != 0) {
                const Rational c = costs[b];
                for (int j = 0; j <= columns; ++j) z[j] -= c * rows[r][j];
            }
        }
    }
};

}  // namespace

LpSolution lp_maximize(const LpProblem& problem) {
    const int n = static_cast<int>(problem.objective.size());
    const int m = static_cast<int>(problem.constraints.size());

    // Column layout: structural | one slack/surplus per inequality | artificials.
    int inequality_count = 0;
    for (const auto& c : problem.constraints) {
        if (c.relation != LpRelation::equal) ++inequality_count;
    }

    Tableau t;
    t.columns = n + inequality_count;  // artificials appended below
    std::vector<int> artificial_of(m, -1);

    int slack_pos = n;
    std::vector<std::vector<Rational>> raw(m);
    std::vector<int> initial_basis(m, -1);
    for (int i = 0; i < m; ++i) {
        const auto& c = problem.constraints[i];
        if (static_cast<int>(c.coefficients.size()) != n) {
            throw std::invalid_argument("lp constraint width mismatch");
        }
        std::vector<Rational> row(t.columns + 1, Rational(0));
        Rational rhs = c.rhs;
        LpRelation rel = c.relation;
        int sign = 1;
        if (rhs < 0) {
            sign = -1;
            rhs = -rhs;
            if (rel == LpRelation::less_equal) rel = LpRelation::greater_equal;
            else if (rel == LpRelation::greater_equal) rel = LpRelation::less_equal;
        }
        for (int j = 0; j < n; ++j) row[j] = sign * c.coefficients[j];
        row[t.columns] = rhs;
        if (rel == LpRelation::less_equal) {
            row[slack_pos] = 1;
            initial_basis[i] = slack_pos++;
        } else if (rel == LpRelation::greater_equal) {
            row[slack_pos] = -1;
            ++slack_pos;
        }
        raw[i] = std::move(row);
    }

    // Append artificial columns for rows without a feasible starting basic.
    int artificial_count = 0;
    for (int i = 0; i < m; ++i) {
        if (initial_basis[i] < 0) ++artificial_count;
    }
    const int total = t.columns + artificial_count;
    int art_pos = t.columns;
    for (int i = 0; i < m; ++i) {
        raw[i].insert(raw[i].end() - 1, artificial_count, Rational(0));
        if (initial_basis[i] < 0) {
            raw[i][art_pos] = 1;
            artificial_of[i] = art_pos;
            initial_basis[i] = art_pos++;
        }
    }
    t.columns = total;
    t.rows = std::move(raw);
    t.basis = initial_basis;

    LpSolution solution;

    if (artificial_count > 0) {
        // Phase 1: maximize -sum(artificials).
        std::vector<Rational> phase1(total, Rational(0));
        for (int i = 0; i < m; ++i) {
            if (artificial_of[i] >= 0) phase1[artificial_of[i]] = -1;
        }
        t.price_out(phase1);
        while (t.step()) {
        }
        Rational infeasibility = 0;
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] >= total - artificial_count) infeasibility += t.rhs(i);
        }
        if (infeasibility != 0) {
            solution.status = LpStatus::infeasible;
            return solution;
        }
        // Drive degenerate artificials out of the basis; drop redundant rows.
        for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
            if (t.basis[i] < total - artificial_count) continue;
            int pivot_col = -1;
            for (int j = 0; j < total - artificial_count; ++j) {
                if (t.rows[i][j] != 0) {
                    pivot_col = j;
                    break;
                }
            }
            if (pivot_col >= 0) {
                t.pivot(i, pivot_col);
            } else {
                t.rows.erase(t.rows.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            }
        }
        // Drop artificial columns.
        for (auto& row : t.rows) row.erase(row.begin() + (total - artificial_count), row.end() - 1);
        t.columns = total - artificial_count;
    }

    // Phase 2.
    std::vector<Rational> costs(t.columns, Rational(0));
    for (int j = 0; j < n; ++j) costs[j] = problem.objective[j];
    t.price_out(costs);
    try {
        while (t.step()) {
        }
    } catch (const std::runtime_error&) {
        solution.status = LpStatus::unbounded;
        return solution;
    }

    solution.status = LpStatus::optimal;
    solution.values.assign(n, Rational(0));
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (t.basis[r] < n) solution.values[t.basis[r]] = t.rows[r][t.columns];
    }
    solution.objective_value = 0;
    for (int j = 0; j < n; ++j) {
        solution.objective_value += problem.objective[j] * solution.values[j];
    }
    return solution;
}

}  // namespace groupfair
