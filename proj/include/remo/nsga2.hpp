#pragma once

#include <vector>

#include "remo/config.hpp"
#include "remo/trace.hpp"
#include "remo/types.hpp"
#include "remo/variation.hpp"

namespace remo {

/// Population annotated with constrained-dominance front index and crowding
/// distance (boundary members carry +infinity).
struct RankedPopulation {
  std::vector<Individual> individuals;
  std::vector<int> rank;
  std::vector<double> crowding;
  std::vector<std::vector<int>> fronts;  // member indices per front
};

/// Fast non-dominated sort under the constraint-dominance relation
/// (a dominates b iff cdp_compare(a, b) says the first is better).
/// Crowding distances are filled per front.
RankedPopulation constrained_nondominated_sort(std::vector<Individual> pop);

/// Crowding distance of a single front: per objective, boundary individuals
/// get +infinity and interior ones accumulate normalized neighbor gaps.
/// An objective with zero range across the front contributes nothing.
std::vector<double> crowding_distance(const std::vector<Individual>& front);

/// NSGA-II with constrained-dominance sorting hosting any repair kind.
/// Reproduction is the same DE + polynomial-mutation pipeline used by the
/// decomposition driver, fed from a binary-tournament mating pool.
RunOutput nsga2_cdp_run(const ProblemSpec& problem, RepairKind repair,
                        const RunConfig& config, RandomStream& rng,
                        const TraceContext* trace_ctx = nullptr);

}  // namespace remo
