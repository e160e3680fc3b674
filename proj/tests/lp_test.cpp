#include <gtest/gtest.h>

#include "cutcones/lp.hpp"

using namespace cutcones;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

/// Checks a claimed optimal point against the program: sign conditions,
/// every constraint, and the objective value.
void expect_feasible_with_value(const LinearProgram& lp, const std::vector<Rational>& x,
                                const Rational& value) {
    ASSERT_EQ(x.size(), lp.objective.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (lp.signs[j] == VarSign::NonNegative) EXPECT_GE(x[j], 0);
        if (lp.signs[j] == VarSign::NonPositive) EXPECT_LE(x[j], 0);
    }
    for (std::size_t i = 0; i < lp.eq_lhs.size(); ++i) {
        Rational lhs;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += lp.eq_lhs[i][j] * x[j];
        EXPECT_EQ(lhs, lp.eq_rhs[i]) << "equality row " << i;
    }
    for (std::size_t i = 0; i < lp.ge_lhs.size(); ++i) {
        Rational lhs;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += lp.ge_lhs[i][j] * x[j];
        EXPECT_GE(lhs, lp.ge_rhs[i]) << "inequality row " << i;
    }
    Rational obj;
    for (std::size_t j = 0; j < x.size(); ++j) obj += lp.objective[j] * x[j];
    EXPECT_EQ(obj, value);
}

} // namespace

TEST(Simplex, TextbookOptimum) {
    // max 3x+5y s.t. x<=4, 2y<=12, 3x+2y<=18 -> 36 at (2,6)
    LinearProgram lp(2);
    lp.objective = {r(3), r(5)};
    lp.add_ge({r(-1), r(0)}, r(-4));
    lp.add_ge({r(0), r(-2)}, r(-12));
    lp.add_ge({r(-3), r(-2)}, r(-18));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.objective, r(36));
    EXPECT_EQ(res.primal, (std::vector<Rational>{r(2), r(6)}));
    expect_feasible_with_value(lp, res.primal, res.objective);
}

TEST(Simplex, FractionalOptimum) {
    LinearProgram lp(2);
    lp.objective = {r(2), r(3)};
    lp.add_ge({r(-1), r(-2)}, r(-4));
    lp.add_ge({r(-3), r(-1)}, r(-6));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.objective, r(34, 5));
    EXPECT_EQ(res.primal, (std::vector<Rational>{r(8, 5), r(6, 5)}));
}

TEST(Simplex, BealeCyclingExampleTerminates) {
    // The classic degenerate program that cycles under naive pivoting.
    // max 3/4 x1 - 150 x2 + 1/50 x3 - 6 x4
    // s.t. 1/4 x1 - 60 x2 - 1/25 x3 + 9 x4 <= 0
    //      1/2 x1 - 90 x2 - 1/50 x3 + 3 x4 <= 0
    //      x3 <= 1
    LinearProgram lp(4);
    lp.objective = {r(3, 4), r(-150), r(1, 50), r(-6)};
    lp.add_ge({r(-1, 4), r(60), r(1, 25), r(-9)}, r(0));
    lp.add_ge({r(-1, 2), r(90), r(1, 50), r(-3)}, r(0));
    lp.add_ge({r(0), r(0), r(-1), r(0)}, r(-1));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.objective, r(1, 20));
    EXPECT_EQ(res.primal, (std::vector<Rational>{r(1, 25), r(0), r(1), r(0)}));
}

TEST(Simplex, EqualityPinsTheObjective) {
    // max x+y with x+y=3, x<=2, y free
    LinearProgram lp(2);
    lp.objective = {r(1), r(1)};
    lp.signs[1] = VarSign::Free;
    lp.add_eq({r(1), r(1)}, r(3));
    lp.add_ge({r(-1), r(0)}, r(-2));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.objective, r(3));
    expect_feasible_with_value(lp, res.primal, r(3));
}

TEST(Simplex, NonPositiveVariables) {
    // max x with x <= -2 and x non-positive -> -2
    LinearProgram lp(1);
    lp.objective = {r(1)};
    lp.signs[0] = VarSign::NonPositive;
    lp.add_ge({r(-1)}, r(2));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.objective, r(-2));
    EXPECT_EQ(res.primal[0], r(-2));
}

TEST(Simplex, InfeasibleYieldsFarkasMultipliers) {
    // x >= 2 and x <= 1 cannot both hold
    LinearProgram lp(1);
    lp.objective = {r(1)};
    lp.add_ge({r(1)}, r(2));
    lp.add_ge({r(-1)}, r(-1));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Infeasible);
    ASSERT_EQ(res.farkas.size(), 2u);
    // multipliers on >= rows are non-negative, the combined row is
    // dominated (<= 0 against a non-negative variable) yet its right-hand
    // side is positive: no x can satisfy both.
    EXPECT_GE(res.farkas[0], 0);
    EXPECT_GE(res.farkas[1], 0);
    EXPECT_LE(res.farkas[0] * r(1) + res.farkas[1] * r(-1), 0);
    EXPECT_GT(res.farkas[0] * r(2) + res.farkas[1] * r(-1), 0);
}

TEST(Simplex, InfeasibleEqualitySystem) {
    // x + y = 1, x + y = 2
    LinearProgram lp(2);
    lp.objective = {r(0), r(0)};
    lp.add_eq({r(1), r(1)}, r(1));
    lp.add_eq({r(1), r(1)}, r(2));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Infeasible);
    ASSERT_EQ(res.farkas.size(), 2u);
    // combined coefficients vanish, combined rhs is positive
    EXPECT_EQ(res.farkas[0] + res.farkas[1], 0);
    EXPECT_GT(res.farkas[0] * r(1) + res.farkas[1] * r(2), 0);
}

TEST(Simplex, UnboundedYieldsImprovingRay) {
    // max x + y with x - y >= 1
    LinearProgram lp(2);
    lp.objective = {r(1), r(1)};
    lp.add_ge({r(1), r(-1)}, r(1));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Unbounded);
    ASSERT_EQ(res.ray.size(), 2u);
    // the ray keeps every constraint satisfied and strictly improves
    EXPECT_GE(res.ray[0], 0);
    EXPECT_GE(res.ray[1], 0);
    EXPECT_GE(res.ray[0] * r(1) + res.ray[1] * r(-1), 0);
    EXPECT_GT(res.ray[0] + res.ray[1], 0);
}

TEST(Simplex, RedundantRowsAreHarmless) {
    // duplicated equality leaves a redundant artificial to drive out
    LinearProgram lp(2);
    lp.objective = {r(1), r(2)};
    lp.add_eq({r(1), r(1)}, r(4));
    lp.add_eq({r(2), r(2)}, r(8));
    lp.add_ge({r(-1), r(0)}, r(-3));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.objective, r(8));  // x = 0, y = 4
    EXPECT_EQ(res.primal, (std::vector<Rational>{r(0), r(4)}));
}

TEST(Simplex, DegenerateZeroRhsRows) {
    // max x s.t. x - y <= 0, y <= 5
    LinearProgram lp(2);
    lp.objective = {r(1), r(0)};
    lp.add_ge({r(-1), r(1)}, r(0));
    lp.add_ge({r(0), r(-1)}, r(-5));
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.objective, r(5));
}

TEST(LinearProgram, RowLengthValidated) {
    LinearProgram lp(3);
    EXPECT_THROW(lp.add_eq({r(1), r(2)}, r(0)), std::invalid_argument);
    EXPECT_THROW(lp.add_ge({r(1), r(2), r(3), r(4)}, r(0)), std::invalid_argument);
}

TEST(DumpLp, StableTextualForm) {
    LinearProgram lp(2);
    lp.objective = {r(1, 2), r(-3)};
    lp.signs[1] = VarSign::Free;
    lp.add_eq({r(1), r(1)}, r(1));
    lp.add_ge({r(2), r(0)}, r(-1, 3));
    std::string dump = dump_lp(lp);
    EXPECT_EQ(dump,
              "vars 2\n"
              "max 1/2 -3\n"
              "sign 0 nonneg\n"
              "sign 1 free\n"
              "eq 1 1 = 1\n"
              "ge 2 0 >= -1/3\n");
}
