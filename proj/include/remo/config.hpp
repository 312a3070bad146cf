#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "remo/repair.hpp"
#include "remo/variation.hpp"

namespace remo {

enum class Algorithm { Moead, Nsga2 };

std::string_view to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view name);

/// One experiment cell: a problem/algorithm/repair choice plus the shared
/// runtime parameters. Defaults follow the benchmark's standard settings
/// (N = 200, 500k evaluations, 30 runs, T = 20, delta = 0.9, n_r = 2,
/// F = 0.5, CR = 1.0, eta_m = 20, pm = 1/n).
struct RunConfig {
  std::string problem;
  Algorithm algorithm = Algorithm::Moead;
  RepairKind repair = RepairKind::Reverse;

  int population_size = 200;
  long long budget = 500000;
  int runs = 30;
  std::uint64_t seed = 1;

  // MOEA/D
  int neighborhood_size = 20;  // T
  double delta = 0.9;
  int max_replacements = 2;  // n_r

  // Reproduction
  double de_scale = 0.5;        // F
  double crossover_rate = 1.0;  // CR
  double mutation_prob = 0.0;   // pm; 0 means "use 1/n"
  double mutation_eta = 20.0;   // distribution index

  VariationParams variation_for(int n) const {
    VariationParams vp;
    vp.de_scale = de_scale;
    vp.crossover_rate = crossover_rate;
    vp.mutation_prob = mutation_prob > 0.0 ? mutation_prob : 1.0 / n;
    vp.mutation_eta = mutation_eta;
    return vp;
  }
};

}  // namespace remo
