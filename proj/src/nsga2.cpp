#include "remo/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "remo/core.hpp"
#include "remo/repair.hpp"
#include "run_common.hpp"

namespace remo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void fill_crowding(RankedPopulation& ranked) {
  ranked.crowding.assign(ranked.individuals.size(), 0.0);
  for (const auto& front : ranked.fronts) {
    std::vector<Individual> members;
    members.reserve(front.size());
    for (int idx : front)
      members.push_back(ranked.individuals[static_cast<size_t>(idx)]);
    const std::vector<double> dist = crowding_distance(members);
    for (size_t k = 0; k < front.size(); ++k)
      ranked.crowding[static_cast<size_t>(front[k])] = dist[k];
  }
}

// Tournament winner by (rank asc, crowding desc); exact ties are resolved
// by a fair coin so neither slot is favored.
int tournament(const std::vector<int>& rank, const std::vector<double>& crowd,
               int a, int b, RandomStream& rng) {
  if (a == b) return a;
  const auto ua = static_cast<size_t>(a);
  const auto ub = static_cast<size_t>(b);
  if (rank[ua] != rank[ub]) return rank[ua] < rank[ub] ? a : b;
  if (crowd[ua] != crowd[ub]) return crowd[ua] > crowd[ub] ? a : b;
  return rng.uniform() < 0.5 ? a : b;
}

}  // namespace

RankedPopulation constrained_nondominated_sort(std::vector<Individual> pop) {
  RankedPopulation ranked;
  ranked.individuals = std::move(pop);
  const int count = static_cast<int>(ranked.individuals.size());
  ranked.rank.assign(static_cast<size_t>(count), 0);
  if (count == 0) return ranked;

  std::vector<std::vector<int>> dominated_by(static_cast<size_t>(count));
  std::vector<int> domination_count(static_cast<size_t>(count), 0);
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const CdpResult cmp = cdp_compare(ranked.individuals[static_cast<size_t>(a)],
                                        ranked.individuals[static_cast<size_t>(b)]);
      if (cmp == CdpResult::FirstBetter) {
        dominated_by[static_cast<size_t>(a)].push_back(b);
        ++domination_count[static_cast<size_t>(b)];
      } else if (cmp == CdpResult::SecondBetter) {
        dominated_by[static_cast<size_t>(b)].push_back(a);
        ++domination_count[static_cast<size_t>(a)];
      }
    }
  }

  std::vector<int> current;
  for (int i = 0; i < count; ++i)
    if (domination_count[static_cast<size_t>(i)] == 0) current.push_back(i);
  int front_index = 0;
  while (!current.empty()) {
    std::vector<int> next;
    for (int i : current) {
      ranked.rank[static_cast<size_t>(i)] = front_index;
      for (int j : dominated_by[static_cast<size_t>(i)])
        if (--domination_count[static_cast<size_t>(j)] == 0) next.push_back(j);
    }
    ranked.fronts.push_back(std::move(current));
    current = std::move(next);
    ++front_index;
  }
  fill_crowding(ranked);
  return ranked;
}

std::vector<double> crowding_distance(const std::vector<Individual>& front) {
  const int count = static_cast<int>(front.size());
  if (count == 0) throw ContractError("crowding_distance: empty front");
  std::vector<double> dist(static_cast<size_t>(count), 0.0);
  if (count <= 2) {
    std::fill(dist.begin(), dist.end(), kInf);
    return dist;
  }
  const Eigen::Index m = front.front().eval.objectives.size();
  std::vector<int> order(static_cast<size_t>(count));
  for (Eigen::Index obj = 0; obj < m; ++obj) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return front[static_cast<size_t>(a)].eval.objectives[obj] <
             front[static_cast<size_t>(b)].eval.objectives[obj];
    });
    const double lo = front[static_cast<size_t>(order.front())].eval.objectives[obj];
    const double hi = front[static_cast<size_t>(order.back())].eval.objectives[obj];
    dist[static_cast<size_t>(order.front())] = kInf;
    dist[static_cast<size_t>(order.back())] = kInf;
    if (hi == lo) continue;  // degenerate objective: contributes nothing
    for (int k = 1; k + 1 < count; ++k) {
      const double gap =
          front[static_cast<size_t>(order[static_cast<size_t>(k + 1)])].eval.objectives[obj] -
          front[static_cast<size_t>(order[static_cast<size_t>(k - 1)])].eval.objectives[obj];
      dist[static_cast<size_t>(order[static_cast<size_t>(k)])] += gap / (hi - lo);
    }
  }
  return dist;
}

RunOutput nsga2_cdp_run(const ProblemSpec& problem, RepairKind repair,
                        const RunConfig& config, RandomStream& rng,
                        const TraceContext* trace_ctx) {
  const int pop_size = config.population_size;
  if (pop_size < 4) throw ConfigError("nsga2_cdp_run: population too small");
  if (pop_size % 2 != 0)
    throw ConfigError("nsga2_cdp_run: population size must be even");
  if (config.budget < pop_size)
    throw ConfigError("nsga2_cdp_run: budget smaller than population size");

  const VariationParams vp = config.variation_for(problem.n);

  std::vector<Individual> population;
  population.reserve(static_cast<size_t>(pop_size));
  for (int i = 0; i < pop_size; ++i) {
    Individual ind;
    ind.x = detail::random_point(problem.bounds, rng);
    ind.eval = evaluate(problem, ind.x);
    population.push_back(std::move(ind));
  }
  long long evals = pop_size;

  RankedPopulation ranked = constrained_nondominated_sort(std::move(population));

  RunOutput out;
  int generation = 0;
  out.trace.push_back(detail::make_trace_entry(generation, evals,
                                               ranked.individuals, trace_ctx));

  while (evals < config.budget) {
    ++generation;

    // Mating pool: N binary tournaments with replacement.
    std::vector<int> parents(static_cast<size_t>(pop_size));
    for (int i = 0; i < pop_size; ++i)
      parents[static_cast<size_t>(i)] =
          tournament(ranked.rank, ranked.crowding, rng.uniform_int(pop_size),
                     rng.uniform_int(pop_size), rng);

    std::vector<Individual> merged = ranked.individuals;
    merged.reserve(static_cast<size_t>(2 * pop_size));
    for (int i = 0; i < pop_size; ++i) {
      // Offspring i: parent i is the DE base, donors are two other pool slots.
      int r1 = i;
      while (r1 == i) r1 = rng.uniform_int(pop_size);
      int r2 = i;
      while (r2 == i || r2 == r1) r2 = rng.uniform_int(pop_size);

      const Individual& base =
          ranked.individuals[static_cast<size_t>(parents[static_cast<size_t>(i)])];
      const Individual& d1 =
          ranked.individuals[static_cast<size_t>(parents[static_cast<size_t>(r1)])];
      const Individual& d2 =
          ranked.individuals[static_cast<size_t>(parents[static_cast<size_t>(r2)])];

      Individual child;
      child.x = de_offspring(base.x, d1.x, d2.x, vp, rng);
      child.x = repair_vector(child.x, problem.bounds, repair);
      child.x = polynomial_mutation(child.x, problem.bounds, vp, rng);
      child.eval = evaluate(problem, child.x);
      ++evals;
      merged.push_back(std::move(child));
    }

    // Elitist truncation of the 2N union by (rank, crowding desc).
    RankedPopulation union_ranked =
        constrained_nondominated_sort(std::move(merged));
    std::vector<int> selected;
    selected.reserve(static_cast<size_t>(pop_size));
    for (const auto& front : union_ranked.fronts) {
      if (static_cast<int>(selected.size() + front.size()) <= pop_size) {
        selected.insert(selected.end(), front.begin(), front.end());
        if (static_cast<int>(selected.size()) == pop_size) break;
        continue;
      }
      std::vector<int> tail = front;
      std::stable_sort(tail.begin(), tail.end(), [&](int a, int b) {
        return union_ranked.crowding[static_cast<size_t>(a)] >
               union_ranked.crowding[static_cast<size_t>(b)];
      });
      const size_t need = static_cast<size_t>(pop_size) - selected.size();
      selected.insert(selected.end(), tail.begin(),
                      tail.begin() + static_cast<long>(need));
      break;
    }

    RankedPopulation next;
    next.individuals.reserve(static_cast<size_t>(pop_size));
    for (int idx : selected)
      next.individuals.push_back(
          std::move(union_ranked.individuals[static_cast<size_t>(idx)]));
    // Re-rank the survivors so tournament fitness reflects the new population.
    ranked = constrained_nondominated_sort(std::move(next.individuals));

    out.trace.push_back(detail::make_trace_entry(generation, evals,
                                                 ranked.individuals, trace_ctx));
  }

  out.population = std::move(ranked.individuals);
  out.evals = evals;
  return out;
}

}  // namespace remo
