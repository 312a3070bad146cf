#pragma once

#include <vector>

#include "remo/config.hpp"
#include "remo/trace.hpp"
#include "remo/types.hpp"
#include "remo/variation.hpp"

namespace remo {

/// Uniform bi-objective simplex lattice: lambda_k = (k/(N-1), 1 - k/(N-1)).
/// Only m = 2 is supported.
std::vector<Vector> uniform_weights(int count, int objective_count);

/// Indices of the T nearest weight vectors (Euclidean), self included.
std::vector<std::vector<int>> build_neighborhoods(
    const std::vector<Vector>& weights, int neighborhood_size);

/// Tchebycheff aggregation max_i lambda_i |f_i - z*_i|.
double tchebycheff(const Vector& objectives, const Vector& lambda,
                   const Vector& ideal);

/// Constraint-dominance subproblem replacement: the child takes the slot iff
/// it is feasible against an infeasible incumbent, strictly less violating
/// among infeasible, or strictly better in Tchebycheff value among feasible.
bool cdp_replace(const Individual& child, const Individual& incumbent,
                 const Vector& lambda, const Vector& ideal);

/// MOEA/D with constraint-dominance replacement hosting any repair kind.
/// Stops at the first generation boundary at or past the evaluation budget.
RunOutput moead_cdp_run(const ProblemSpec& problem, RepairKind repair,
                        const RunConfig& config, RandomStream& rng,
                        const TraceContext* trace_ctx = nullptr);

}  // namespace remo
