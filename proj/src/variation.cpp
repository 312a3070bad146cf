#include "remo/variation.hpp"

#include <algorithm>
#include <cmath>

namespace remo {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomStream RandomStream::derive(std::uint64_t master_seed,
                                  std::initializer_list<std::string_view> labels,
                                  std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ master_seed;
  for (auto label : labels) {
    h = fnv1a64(label, h);
    h = fnv1a64("/", h);
  }
  h ^= index * 0x9e3779b97f4a7c15ULL;
  std::uint64_t state = h;
  return RandomStream(splitmix64(state));
}

std::uint64_t RandomStream::next_u64() { return engine_(); }

double RandomStream::uniform() {
  // 53 random bits into [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

int RandomStream::uniform_int(int n) {
  // Rejection sampling over a power-of-two window keeps the draw unbiased.
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t mask = ~0ULL >> __builtin_clzll(un | 1);
  std::uint64_t v;
  do {
    v = next_u64() & mask;
  } while (v >= un);
  return static_cast<int>(v);
}

Vector de_offspring(const Vector& base, const Vector& donor1,
                    const Vector& donor2, const VariationParams& params,
                    RandomStream& rng) {
  const Eigen::Index n = base.size();
  if (donor1.size() != n || donor2.size() != n)
    throw ContractError("de_offspring: length mismatch");
  const Eigen::Index forced = rng.uniform_int(static_cast<int>(n));
  Vector out(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const bool cross = rng.uniform() < params.crossover_rate || j == forced;
    out[j] = cross ? base[j] + params.de_scale * (donor1[j] - donor2[j])
                   : base[j];
  }
  return out;
}

Vector polynomial_mutation(const Vector& x, const Bounds& bounds,
                           const VariationParams& params, RandomStream& rng) {
  if (x.size() != bounds.size())
    throw ContractError("polynomial_mutation: length mismatch");
  const double eta = params.mutation_eta;
  const double mut_pow = 1.0 / (eta + 1.0);
  Vector out = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (rng.uniform() > params.mutation_prob) continue;
    const double lo = bounds.lower[j];
    const double hi = bounds.upper[j];
    const double y = x[j];
    const double delta1 = (y - lo) / (hi - lo);
    const double delta2 = (hi - y) / (hi - lo);
    const double r = rng.uniform();
    double deltaq;
    if (r <= 0.5) {
      const double xy = 1.0 - delta1;
      const double val = 2.0 * r + (1.0 - 2.0 * r) * std::pow(xy, eta + 1.0);
      deltaq = std::pow(val, mut_pow) - 1.0;
    } else {
      const double xy = 1.0 - delta2;
      const double val =
          2.0 * (1.0 - r) + 2.0 * (r - 0.5) * std::pow(xy, eta + 1.0);
      deltaq = 1.0 - std::pow(val, mut_pow);
    }
    out[j] = std::clamp(y + deltaq * (hi - lo), lo, hi);
  }
  return out;
}

MatingPick pick_mating_indices(int i, const std::vector<int>& neighborhood,
                               int population_size, double delta,
                               RandomStream& rng) {
  if (neighborhood.empty())
    throw ContractError("pick_mating_indices: empty neighborhood");
  if (population_size < 3)
    throw ContractError("pick_mating_indices: population too small");

  const bool use_neighborhood = rng.uniform() < delta;
  const auto pool_size = use_neighborhood
                             ? static_cast<int>(neighborhood.size())
                             : population_size;
  const auto pool_at = [&](int k) {
    return use_neighborhood ? neighborhood[static_cast<size_t>(k)] : k;
  };

  int eligible = 0;
  for (int k = 0; k < pool_size; ++k)
    if (pool_at(k) != i) ++eligible;
  if (eligible < 2)
    throw ContractError(
        "pick_mating_indices: pool too small for two distinct donors");

  int r1 = i;
  while (r1 == i) r1 = pool_at(rng.uniform_int(pool_size));
  int r2 = i;
  while (r2 == i || r2 == r1) r2 = pool_at(rng.uniform_int(pool_size));
  return MatingPick{r1, r2, use_neighborhood};
}

}  // namespace remo
