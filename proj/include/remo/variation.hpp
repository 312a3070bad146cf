#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "remo/types.hpp"

namespace remo {

struct VariationParams {
  double de_scale = 0.5;        // F
  double crossover_rate = 1.0;  // CR
  double mutation_prob = 0.0;   // pm, per component
  double mutation_eta = 20.0;   // distribution index
};

/// Deterministic seeded generator. Identical seed and call sequence yield
/// identical outputs on every platform: uniforms are built from raw 64-bit
/// engine words, never from std::uniform_real_distribution (whose output is
/// implementation-defined).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Independent stream keyed by (master_seed, labels..., index); stable
  /// under adding unrelated keys, so extending a run matrix never perturbs
  /// existing cells.
  static RandomStream derive(std::uint64_t master_seed,
                             std::initializer_list<std::string_view> labels,
                             std::uint64_t index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();
  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  int uniform_int(int n);                  // {0, ..., n-1}

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Differential-evolution trial vector: per component, with probability CR
/// (or at one forced index) the value is base + F * (donor1 - donor2),
/// otherwise the base value. The result MAY leave the box; repair is the
/// caller's next step.
Vector de_offspring(const Vector& base, const Vector& donor1,
                    const Vector& donor2, const VariationParams& params,
                    RandomStream& rng);

/// Bounded polynomial mutation (Deb & Agrawal): each component is mutated
/// with probability pm; the perturbation respects the box by construction.
Vector polynomial_mutation(const Vector& x, const Bounds& bounds,
                           const VariationParams& params, RandomStream& rng);

struct MatingPick {
  int r1;
  int r2;
  bool from_neighborhood;
};

/// With probability delta the mating pool is the neighborhood, otherwise
/// the whole population; r1, r2 are drawn from the pool, mutually distinct
/// and distinct from i. Throws when the pool cannot satisfy distinctness.
MatingPick pick_mating_indices(int i, const std::vector<int>& neighborhood,
                               int population_size, double delta,
                               RandomStream& rng);

}  // namespace remo
