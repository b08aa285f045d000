#include <doctest.h>

#include "groupfair/simplex.hpp"

using namespace groupfair;

namespace {

LpConstraint row(std::vector<Rational> coeffs, LpRelation rel, Rational rhs) {
    return LpConstraint{std::move(coeffs), rel, std::move(rhs)};
}

}  // namespace

TEST_CASE("two-variable maximum") {
    // max 3x + 2y, x + y <= 4, x + 3y <= 6 -> (4, 0), objective 12
    LpProblem lp;
    lp.objective = {3, 2};
    lp.constraints.push_back(row({1, 1}, LpRelation::less_equal, 4));
    lp.constraints.push_back(row({1, 3}, LpRelation::less_equal, 6));
    const LpSolution s = lp_maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == 12);
    CHECK(s.values == std::vector<Rational>{4, 0});
}

TEST_CASE("fractional optimum stays exact") {
    // max x + y, 2x + y <= 3, x + 2y <= 3 -> x = y = 1, objective 2;
    // perturbing the first rhs to 10/3 moves the vertex to (7/9, 13/9).
    LpProblem lp;
    lp.objective = {1, 1};
    lp.constraints.push_back(row({2, 1}, LpRelation::less_equal, Rational(10, 3)));
    lp.constraints.push_back(row({1, 2}, LpRelation::less_equal, 3));
    const LpSolution s = lp_maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.values == std::vector<Rational>{Rational(11, 9), Rational(8, 9)});
    CHECK(s.objective_value == Rational(19, 9));
}

TEST_CASE("equalities and lower bounds route through phase one") {
    // max x subject to x + y = 1, x >= 1/4, y >= 1/4 -> x = 3/4
    LpProblem lp;
    lp.objective = {1, 0};
    lp.constraints.push_back(row({1, 1}, LpRelation::equal, 1));
    lp.constraints.push_back(row({1, 0}, LpRelation::greater_equal, Rational(1, 4)));
    lp.constraints.push_back(row({0, 1}, LpRelation::greater_equal, Rational(1, 4)));
    const LpSolution s = lp_maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == Rational(3, 4));
    CHECK(s.values == std::vector<Rational>{Rational(3, 4), Rational(1, 4)});
}

TEST_CASE("infeasible systems are detected") {
    LpProblem lp;
    lp.objective = {1};
    lp.constraints.push_back(row({1}, LpRelation::less_equal, 1));
    lp.constraints.push_back(row({1}, LpRelation::greater_equal, 2));
    CHECK(lp_maximize(lp).status == LpStatus::infeasible);

    LpProblem mixture;
    mixture.objective = {0, 0};
    mixture.constraints.push_back(row({1, 1}, LpRelation::equal, 1));
    mixture.constraints.push_back(row({1, 0}, LpRelation::greater_equal, 2));
    CHECK(lp_maximize(mixture).status == LpStatus::infeasible);
}

TEST_CASE("unbounded problems are detected") {
    LpProblem lp;
    lp.objective = {1, 0};
    lp.constraints.push_back(row({0, 1}, LpRelation::less_equal, 1));
    CHECK(lp_maximize(lp).status == LpStatus::unbounded);
}

TEST_CASE("degenerate vertices do not cycle") {
    // Classic degeneracy: redundant constraints meeting at the optimum.
    LpProblem lp;
    lp.objective = {2, 3};
    lp.constraints.push_back(row({1, 1}, LpRelation::less_equal, 2));
    lp.constraints.push_back(row({1, 1}, LpRelation::less_equal, 2));
    lp.constraints.push_back(row({0, 1}, LpRelation::less_equal, 2));
    lp.constraints.push_back(row({1, 0}, LpRelation::less_equal, 0));
    const LpSolution s = lp_maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == 6);
    CHECK(s.values == std::vector<Rational>{0, 2});
}

TEST_CASE("redundant equalities survive phase one") {
    LpProblem lp;
    lp.objective = {1, 1};
    lp.constraints.push_back(row({1, 1}, LpRelation::equal, 1));
    lp.constraints.push_back(row({2, 2}, LpRelation::equal, 2));  // same hyperplane
    const LpSolution s = lp_maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == 1);
}

TEST_CASE("negative right-hand sides are normalized") {
    // max -x with x >= 3 written as -x <= -3 -> x = 3.
    LpProblem lp;
    lp.objective = {-1};
    lp.constraints.push_back(row({-1}, LpRelation::less_equal, -3));
    const LpSolution s = lp_maximize(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.values == std::vector<Rational>{3});
    CHECK(s.objective_value == -3);
}
