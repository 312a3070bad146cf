#pragma once

// Internal helpers shared by the algorithm drivers.

#include <limits>
#include <vector>

#include "remo/core.hpp"
#include "remo/metrics.hpp"
#include "remo/trace.hpp"
#include "remo/types.hpp"
#include "remo/variation.hpp"

namespace remo::detail {

inline Vector random_point(const Bounds& bounds, RandomStream& rng) {
  Vector x(bounds.size());
  for (Eigen::Index j = 0; j < x.size(); ++j)
    x[j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
  return x;
}

inline FrontSet feasible_nondominated_front(
    const std::vector<Individual>& population) {
  FrontSet front;
  for (const auto& ind : population)
    if (ind.eval.feasible()) front.points.push_back(ind.eval.objectives);
  return front.empty() ? front : nondominated_filter(front);
}

inline TraceEntry make_trace_entry(int generation, long long evals,
                                   const std::vector<Individual>& population,
                                   const TraceContext* ctx) {
  TraceEntry entry;
  entry.generation = generation;
  entry.eval_count = evals;
  double best = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const auto& ind : population) {
    best = std::min(best, ind.eval.violation);
    sum += ind.eval.violation;
  }
  entry.best_violation = best;
  entry.mean_violation = sum / static_cast<double>(population.size());
  entry.igd = std::numeric_limits<double>::quiet_NaN();
  entry.hv = std::numeric_limits<double>::quiet_NaN();
  if (ctx != nullptr && ctx->reference != nullptr) {
    const FrontSet front = feasible_nondominated_front(population);
    entry.hv = front.empty() ? 0.0 : hv(front, ctx->ref_point);
    if (!front.empty()) entry.igd = igd(*ctx->reference, front);
  }
  return entry;
}

/// Fisher-Yates shuffle driven by the run's RandomStream.
inline void shuffle_indices(std::vector<int>& indices, RandomStream& rng) {
  for (int k = static_cast<int>(indices.size()) - 1; k > 0; --k)
    std::swap(indices[static_cast<size_t>(k)],
              indices[static_cast<size_t>(rng.uniform_int(k + 1))]);
}

}  // namespace remo::detail
