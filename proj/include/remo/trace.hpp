#pragma once

#include <vector>

#include "remo/metrics.hpp"
#include "remo/types.hpp"

namespace remo {

/// One per-generation snapshot emitted by both algorithm drivers.
/// igd/hv are NaN unless a reference front was supplied for tracing.
struct TraceEntry {
  int generation = 0;
  long long eval_count = 0;
  double best_violation = 0.0;
  double mean_violation = 0.0;
  double igd = 0.0;
  double hv = 0.0;
};

using RunTrace = std::vector<TraceEntry>;

/// Optional per-generation metric tracing.
struct TraceContext {
  const FrontSet* reference = nullptr;
  Vector ref_point;
};

struct RunOutput {
  std::vector<Individual> population;
  RunTrace trace;
  long long evals = 0;
};

}  // namespace remo
