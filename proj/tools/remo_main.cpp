// Command-line experiment runner: benchmark matrix execution, result
// tables, plot-data export, reference fronts, and the problem manifest.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>
#include "CLI11.hpp"

#include "remo/harness.hpp"
#include "remo/problems.hpp"
#include "remo/version.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliState {
  remo::MatrixSpec spec;
  std::string out_dir = "results";
  std::vector<std::string> problems;
  std::vector<std::string> algorithms;
  std::vector<std::string> repairs;
};

void apply_config_file(const std::string& path, CliState& state) {
  std::ifstream in(path);
  if (!in) throw remo::ConfigError("cannot open config file: " + path);
  json doc = json::parse(in);
  auto& base = state.spec.base;
  if (doc.contains("problems")) state.problems = doc["problems"].get<std::vector<std::string>>();
  if (doc.contains("algorithms")) state.algorithms = doc["algorithms"].get<std::vector<std::string>>();
  if (doc.contains("repairs")) state.repairs = doc["repairs"].get<std::vector<std::string>>();
  if (doc.contains("pop_size")) base.population_size = doc["pop_size"].get<int>();
  if (doc.contains("budget")) base.budget = doc["budget"].get<long long>();
  if (doc.contains("runs")) base.runs = doc["runs"].get<int>();
  if (doc.contains("seed")) base.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("neighborhood_size")) base.neighborhood_size = doc["neighborhood_size"].get<int>();
  if (doc.contains("delta")) base.delta = doc["delta"].get<double>();
  if (doc.contains("max_replacements")) base.max_replacements = doc["max_replacements"].get<int>();
  if (doc.contains("de_scale")) base.de_scale = doc["de_scale"].get<double>();
  if (doc.contains("crossover_rate")) base.crossover_rate = doc["crossover_rate"].get<double>();
  if (doc.contains("mutation_prob")) base.mutation_prob = doc["mutation_prob"].get<double>();
  if (doc.contains("mutation_eta")) base.mutation_eta = doc["mutation_eta"].get<double>();
  if (doc.contains("out_dir")) state.out_dir = doc["out_dir"].get<std::string>();
  if (doc.contains("threads")) state.spec.threads = doc["threads"].get<int>();
  if (doc.contains("trace")) state.spec.trace = doc["trace"].get<bool>();
}

void finalize_selection(CliState& state) {
  if (state.problems.empty()) state.problems = remo::problem_catalog();
  if (state.algorithms.empty()) state.algorithms = {"moead", "nsga2"};
  if (state.repairs.empty()) state.repairs = {"clip", "reflect", "reverse"};
  state.spec.problems = state.problems;
  state.spec.algorithms.clear();
  for (const auto& a : state.algorithms)
    state.spec.algorithms.push_back(remo::algorithm_from_string(a));
  state.spec.repairs.clear();
  for (const auto& r : state.repairs)
    state.spec.repairs.push_back(remo::repair_kind_from_string(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained multi-objective benchmark runner"};
  app.set_version_flag("--version", remo::kVersionString);
  app.require_subcommand(1);

  CliState state;
  std::string config_path;
  int resolution = 10000;
  double alpha = 0.05;

  auto* run = app.add_subcommand("run", "Execute the experiment matrix");
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--problem", state.problems, "Problem names (default: all)");
  run->add_option("--algorithm", state.algorithms, "moead and/or nsga2");
  run->add_option("--repair", state.repairs, "clip, reflect and/or reverse");
  auto* pop_opt = run->add_option("--pop-size", state.spec.base.population_size, "Population size N");
  auto* budget_opt = run->add_option("--budget", state.spec.base.budget, "Evaluation budget");
  auto* runs_opt = run->add_option("--runs", state.spec.base.runs, "Independent runs per cell");
  auto* seed_opt = run->add_option("--seed", state.spec.base.seed, "Master seed");
  auto* out_opt = run->add_option("--out-dir", state.out_dir, "Output directory");
  auto* threads_opt = run->add_option("--threads", state.spec.threads, "Worker threads");
  auto* trace_flag = run->add_flag("--trace", state.spec.trace, "Write per-generation trace files");

  auto* tables = app.add_subcommand("tables", "Build Mean/Std and t-test tables");
  tables->add_option("--out-dir", state.out_dir, "Output directory");
  tables->add_option("--alpha", alpha, "Significance level");

  auto* plots = app.add_subcommand("plots", "Export best-HV fronts and constraint boundaries");
  plots->add_option("--out-dir", state.out_dir, "Output directory");

  auto* fronts = app.add_subcommand("reference-fronts", "Generate reference front files");
  fronts->add_option("--out-dir", state.out_dir, "Output directory");
  fronts->add_option("--resolution", resolution, "Pre-filter sample count");
  fronts->add_option("--problem", state.problems, "Problem names (default: all)");

  auto* manifest = app.add_subcommand("manifest", "Print the problem catalog as JSON");
  std::string manifest_output = "-";
  manifest->add_option("--output", manifest_output, "Output file ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      // Config file first, explicit flags override it.
      if (!config_path.empty()) {
        CliState file_state;
        apply_config_file(config_path, file_state);
        if (state.problems.empty()) state.problems = file_state.problems;
        if (state.algorithms.empty()) state.algorithms = file_state.algorithms;
        if (state.repairs.empty()) state.repairs = file_state.repairs;
        if (!pop_opt->count()) state.spec.base.population_size = file_state.spec.base.population_size;
        if (!budget_opt->count()) state.spec.base.budget = file_state.spec.base.budget;
        if (!runs_opt->count()) state.spec.base.runs = file_state.spec.base.runs;
        if (!seed_opt->count()) state.spec.base.seed = file_state.spec.base.seed;
        if (!out_opt->count()) state.out_dir = file_state.out_dir;
        if (!threads_opt->count()) state.spec.threads = file_state.spec.threads;
        if (!trace_flag->count()) state.spec.trace = file_state.spec.trace;
        state.spec.base.neighborhood_size = file_state.spec.base.neighborhood_size;
        state.spec.base.delta = file_state.spec.base.delta;
        state.spec.base.max_replacements = file_state.spec.base.max_replacements;
        state.spec.base.de_scale = file_state.spec.base.de_scale;
        state.spec.base.crossover_rate = file_state.spec.base.crossover_rate;
        state.spec.base.mutation_prob = file_state.spec.base.mutation_prob;
        state.spec.base.mutation_eta = file_state.spec.base.mutation_eta;
      }
      finalize_selection(state);
      const auto results = remo::run_matrix(state.spec, state.out_dir);
      std::size_t total_runs = 0;
      for (const auto& cell : results) total_runs += cell.runs.size();
      std::cout << "completed " << results.size() << " cells (" << total_runs
                << " runs) -> " << state.out_dir << "/results.csv\n";
    } else if (tables->parsed()) {
      remo::make_tables(state.out_dir, alpha);
      std::cout << "tables written to " << state.out_dir << "/tables\n";
    } else if (plots->parsed()) {
      remo::export_plot_data(state.out_dir);
      std::cout << "plot data written to " << state.out_dir << "/plots\n";
    } else if (fronts->parsed()) {
      if (state.problems.empty()) state.problems = remo::problem_catalog();
      const fs::path ref_dir = fs::path(state.out_dir) / "reference_fronts";
      remo::write_reference_fronts(ref_dir, state.problems, resolution);
      std::cout << "reference fronts written to " << ref_dir.string() << "\n";
    } else if (manifest->parsed()) {
      const std::string doc = remo::problem_manifest_json();
      if (manifest_output == "-") {
        std::cout << doc << "\n";
      } else {
        std::ofstream out(manifest_output);
        out << doc << "\n";
        std::cout << "manifest written to " << manifest_output << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
