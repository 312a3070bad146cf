#pragma once

#include "remo/types.hpp"

namespace remo {

enum class CdpResult { FirstBetter, SecondBetter, Tie };

/// Sum of positive violation parts: sum_j max(0, -c_j).
/// Zero exactly when every constraint value is >= 0.
double aggregate_violation(const Vector& constraint_values);

/// Evaluates the problem at x. Both the dimension and the box bounds are
/// contract-checked; repair must run before evaluation.
Evaluation evaluate(const ProblemSpec& problem, const Vector& x);

/// Minimization Pareto dominance: a <= b everywhere and a < b somewhere.
bool pareto_dominates(const Vector& a, const Vector& b);
bool pareto_dominates(const Evaluation& a, const Evaluation& b);

/// Constraint-dominance comparison: a feasible individual beats an
/// infeasible one; among infeasible, the smaller violation wins; among
/// feasible, Pareto dominance decides. Everything else is a tie.
CdpResult cdp_compare(const Individual& a, const Individual& b);

}  // namespace remo
