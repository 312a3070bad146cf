#include "remo/core.hpp"

namespace remo {

double aggregate_violation(const Vector& constraint_values) {
  double total = 0.0;
  for (Eigen::Index j = 0; j < constraint_values.size(); ++j)
    total += std::max(0.0, -constraint_values[j]);
  return total;
}

Evaluation evaluate(const ProblemSpec& problem, const Vector& x) {
  if (x.size() != problem.n)
    throw ContractError("evaluate: decision vector has wrong dimension for " +
                        problem.name);
  if (!problem.bounds.contains(x))
    throw ContractError("evaluate: decision vector violates box bounds for " +
                        problem.name + " (run repair first)");
  return problem.evaluator(x);
}

bool pareto_dominates(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw ContractError("pareto_dominates: objective count mismatch");
  bool strictly_better = false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly_better = true;
  }
  return strictly_better;
}

bool pareto_dominates(const Evaluation& a, const Evaluation& b) {
  return pareto_dominates(a.objectives, b.objectives);
}

CdpResult cdp_compare(const Individual& a, const Individual& b) {
  const bool fa = a.eval.feasible();
  const bool fb = b.eval.feasible();
  if (fa != fb) return fa ? CdpResult::FirstBetter : CdpResult::SecondBetter;
  if (!fa) {
    if (a.eval.violation < b.eval.violation) return CdpResult::FirstBetter;
    if (b.eval.violation < a.eval.violation) return CdpResult::SecondBetter;
    return CdpResult::Tie;
  }
  if (pareto_dominates(a.eval, b.eval)) return CdpResult::FirstBetter;
  if (pareto_dominates(b.eval, a.eval)) return CdpResult::SecondBetter;
  return CdpResult::Tie;
}

}  // namespace remo
