#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "remo/config.hpp"
#include "remo/metrics.hpp"
#include "remo/types.hpp"

namespace remo {

/// The experiment matrix: every (problem, algorithm, repair, run) cell plus
/// shared runtime parameters and execution options.
struct MatrixSpec {
  std::vector<std::string> problems;
  std::vector<Algorithm> algorithms;
  std::vector<RepairKind> repairs;
  RunConfig base;  // population size, budget, runs, master seed, ...
  int threads = 1;
  bool trace = false;
};

/// One row of results.csv.
struct RunRecord {
  std::string problem;
  Algorithm algorithm = Algorithm::Moead;
  RepairKind repair = RepairKind::Clip;
  std::uint64_t seed = 0;
  double igd_value = 0.0;  // NaN marks a failed run (no feasible point)
  double hv_value = 0.0;
  double feasible_fraction = 0.0;
  long long evals = 0;
  double wall_ms = 0.0;
  int run_index = 0;
};

struct CellResult {
  RunConfig config;
  std::vector<RunRecord> runs;
};

/// Stable per-run seed: hash of (master_seed, problem, algorithm, repair,
/// run_index). Adding cells to a matrix never perturbs existing ones.
std::uint64_t derive_run_seed(std::uint64_t master_seed,
                              const std::string& problem, Algorithm algorithm,
                              RepairKind repair, int run_index);

/// Executes every cell of the matrix, persisting incrementally into
/// out_dir/results.csv (plus per-run population files) so interrupted
/// matrices resume. Requires a reference front file per problem under
/// out_dir/reference_fronts/ and fails fast when one is missing.
std::vector<CellResult> run_matrix(const MatrixSpec& spec,
                                   const std::filesystem::path& out_dir);

/// Generates and writes reference front files (<problem>.dat) for the given
/// problems at the given pre-filter resolution.
void write_reference_fronts(const std::filesystem::path& ref_dir,
                            const std::vector<std::string>& problems,
                            int resolution);

/// Per-instance Mean/Std tables for IGD and HV per (algorithm, repair) and
/// pairwise t-test tables (reverse vs clip, reverse vs reflect), in CSV and
/// aligned-text form, under out_dir/tables/. Throws with an explicit
/// missing-cell report when the matrix in results.csv is incomplete.
void make_tables(const std::filesystem::path& out_dir, double alpha = 0.05);

/// For each (problem, algorithm, repair): the final population of the run
/// with the best hypervolume, written in the front-file format, plus one
/// constraint-boundary polyline file per problem. Files land under
/// out_dir/plots/.
void export_plot_data(const std::filesystem::path& out_dir);

/// results.csv parsing (used by tables/plots and by tests).
std::vector<RunRecord> read_results_csv(const std::filesystem::path& path);

}  // namespace remo
