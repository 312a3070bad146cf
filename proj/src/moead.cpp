#include "remo/moead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "remo/core.hpp"
#include "remo/repair.hpp"
#include "run_common.hpp"

namespace remo {

std::vector<Vector> uniform_weights(int count, int objective_count) {
  if (objective_count != 2)
    throw ContractError("uniform_weights: only m = 2 is supported");
  if (count < 2) throw ContractError("uniform_weights: needs N >= 2");
  std::vector<Vector> weights;
  weights.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double w = static_cast<double>(k) / (count - 1);
    Vector lambda(2);
    lambda << w, 1.0 - w;
    weights.push_back(std::move(lambda));
  }
  return weights;
}

std::vector<std::vector<int>> build_neighborhoods(
    const std::vector<Vector>& weights, int neighborhood_size) {
  const int count = static_cast<int>(weights.size());
  if (neighborhood_size < 1 || neighborhood_size > count)
    throw ContractError("build_neighborhoods: invalid neighborhood size");
  std::vector<std::vector<int>> neighborhoods(static_cast<size_t>(count));
  std::vector<int> order(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::iota(order.begin(), order.end(), 0);
    const Vector& wi = weights[static_cast<size_t>(i)];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return (weights[static_cast<size_t>(a)] - wi).squaredNorm() <
             (weights[static_cast<size_t>(b)] - wi).squaredNorm();
    });
    neighborhoods[static_cast<size_t>(i)].assign(
        order.begin(), order.begin() + neighborhood_size);
  }
  return neighborhoods;
}

double tchebycheff(const Vector& objectives, const Vector& lambda,
                   const Vector& ideal) {
  if (objectives.size() != lambda.size() || objectives.size() != ideal.size())
    throw ContractError("tchebycheff: size mismatch");
  double best = 0.0;
  for (Eigen::Index i = 0; i < objectives.size(); ++i)
    best = std::max(best, lambda[i] * std::abs(objectives[i] - ideal[i]));
  return best;
}

bool cdp_replace(const Individual& child, const Individual& incumbent,
                 const Vector& lambda, const Vector& ideal) {
  const bool child_feasible = child.eval.feasible();
  const bool incumbent_feasible = incumbent.eval.feasible();
  if (child_feasible && !incumbent_feasible) return true;
  if (!child_feasible && incumbent_feasible) return false;
  if (!child_feasible)
    return child.eval.violation < incumbent.eval.violation;
  return tchebycheff(child.eval.objectives, lambda, ideal) <
         tchebycheff(incumbent.eval.objectives, lambda, ideal);
}

RunOutput moead_cdp_run(const ProblemSpec& problem, RepairKind repair,
                        const RunConfig& config, RandomStream& rng,
                        const TraceContext* trace_ctx) {
  const int pop_size = config.population_size;
  if (pop_size < 2 || config.neighborhood_size < 2 ||
      config.neighborhood_size > pop_size)
    throw ConfigError("moead_cdp_run: requires N >= T >= 2");
  if (config.budget < pop_size)
    throw ConfigError("moead_cdp_run: budget smaller than population size");

  const auto weights = uniform_weights(pop_size, problem.m);
  const auto neighborhoods =
      build_neighborhoods(weights, config.neighborhood_size);
  const VariationParams vp = config.variation_for(problem.n);

  RunOutput out;
  out.population.reserve(static_cast<size_t>(pop_size));
  for (int i = 0; i < pop_size; ++i) {
    Individual ind;
    ind.x = detail::random_point(problem.bounds, rng);
    ind.eval = evaluate(problem, ind.x);
    out.population.push_back(std::move(ind));
  }
  out.evals = pop_size;

  Vector ideal = out.population.front().eval.objectives;
  for (const auto& ind : out.population)
    ideal = ideal.cwiseMin(ind.eval.objectives);

  int generation = 0;
  out.trace.push_back(
      detail::make_trace_entry(generation, out.evals, out.population, trace_ctx));

  std::vector<int> all_indices(static_cast<size_t>(pop_size));
  std::iota(all_indices.begin(), all_indices.end(), 0);

  while (out.evals < config.budget) {
    ++generation;
    for (int i = 0; i < pop_size; ++i) {
      const auto& neighborhood = neighborhoods[static_cast<size_t>(i)];
      const MatingPick pick = pick_mating_indices(
          i, neighborhood, pop_size, config.delta, rng);

      Individual child;
      child.x = de_offspring(out.population[static_cast<size_t>(i)].x,
                             out.population[static_cast<size_t>(pick.r1)].x,
                             out.population[static_cast<size_t>(pick.r2)].x,
                             vp, rng);
      child.x = repair_vector(child.x, problem.bounds, repair);
      child.x = polynomial_mutation(child.x, problem.bounds, vp, rng);
      child.eval = evaluate(problem, child.x);
      ++out.evals;

      ideal = ideal.cwiseMin(child.eval.objectives);

      // Replacement scope mirrors the mating scope; the traversal order is
      // randomized so the n_r cap carries no positional bias.
      std::vector<int> pool = pick.from_neighborhood ? neighborhood : all_indices;
      detail::shuffle_indices(pool, rng);
      int replaced = 0;
      for (int idx : pool) {
        if (replaced >= config.max_replacements) break;
        Individual& incumbent = out.population[static_cast<size_t>(idx)];
        if (cdp_replace(child, incumbent, weights[static_cast<size_t>(idx)],
                        ideal)) {
          incumbent = child;
          ++replaced;
        }
      }
    }
    out.trace.push_back(detail::make_trace_entry(generation, out.evals,
                                                 out.population, trace_ctx));
  }
  return out;
}

}  // namespace remo
