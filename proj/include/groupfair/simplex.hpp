#pragma once

#include <vector>

#include "groupfair/rational.hpp"

namespace groupfair {

enum class LpStatus { optimal, infeasible, unbounded };

enum class LpRelation { less_equal, greater_equal, equal };

struct LpConstraint {
    std::vector<Rational> coefficients;
    LpRelation relation = LpRelation::less_equal;
    Rational rhs;
};

// maximize objective . x  subject to the constraints and x >= 0.
struct LpProblem {
    std::vector<Rational> objective;
    std::vector<LpConstraint> constraints;
};

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective_value;
    std::vector<Rational> values;
};

// Dense two-phase simplex with exact rational pivoting and Bland's rule
// (no cycling, deterministic). Sized for a few constraints over up to a few
// thousand variables.
LpSolution lp_maximize(const LpProblem& problem);

}  // namespace groupfair
