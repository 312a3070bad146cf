#include "remo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "remo/core.hpp"
#include "remo/moead.hpp"
#include "remo/nsga2.hpp"
#include "remo/problems.hpp"
#include "remo/stats.hpp"
#include "remo/version.hpp"
#include "run_common.hpp"

namespace remo {
namespace {

namespace fs = std::filesystem;

constexpr const char* kCsvHeader =
    "problem,algorithm,repair,seed,igd,hv,feasible_fraction,evals,wall_ms";

const RepairKind kAllRepairs[] = {RepairKind::Clip, RepairKind::Reflect,
                                  RepairKind::Reverse};

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sci2(double v) {
  if (std::isnan(v)) return "     nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2E", v);
  return buf;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[40];
  std::tm tm_utc;
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string matrix_config_hash(const MatrixSpec& spec) {
  std::ostringstream ss;
  for (const auto& p : spec.problems) ss << p << ';';
  for (auto a : spec.algorithms) ss << to_string(a) << ';';
  for (auto r : spec.repairs) ss << to_string(r) << ';';
  const auto& b = spec.base;
  ss << b.population_size << ';' << b.budget << ';' << b.runs << ';' << b.seed
     << ';' << b.neighborhood_size << ';' << b.delta << ';'
     << b.max_replacements << ';' << b.de_scale << ';' << b.crossover_rate
     << ';' << b.mutation_prob << ';' << b.mutation_eta;
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(ss.str())));
  return buf;
}

struct Cell {
  std::string problem;
  Algorithm algorithm;
  RepairKind repair;
  int run_index;
  std::uint64_t seed;
};

using CellKey = std::tuple<std::string, int, int, std::uint64_t>;

CellKey key_of(const std::string& problem, Algorithm a, RepairKind r,
               std::uint64_t seed) {
  return {problem, static_cast<int>(a), static_cast<int>(r), seed};
}

std::string population_filename(const Cell& cell) {
  std::ostringstream ss;
  ss << cell.problem << '_' << to_string(cell.algorithm) << '_'
     << to_string(cell.repair) << "_seed" << cell.seed << ".dat";
  return ss.str();
}

std::string csv_row(const RunRecord& rec) {
  std::ostringstream ss;
  ss << rec.problem << ',' << to_string(rec.algorithm) << ','
     << to_string(rec.repair) << ',' << rec.seed << ',' << g17(rec.igd_value)
     << ',' << g17(rec.hv_value) << ',' << g17(rec.feasible_fraction) << ','
     << rec.evals << ',';
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", rec.wall_ms);
  ss << buf;
  return ss.str();
}

void write_provenance(std::ostream& out, const std::string& config_hash,
                      std::uint64_t master_seed) {
  out << "# version: " << kVersionString << "\n";
  out << "# master_seed: " << master_seed << "\n";
  out << "# config_hash: " << config_hash << "\n";
  out << "# generated: " << iso_timestamp() << "\n";
}

struct ResultsMeta {
  std::string config_hash = "unknown";
  std::uint64_t master_seed = 0;
};

ResultsMeta read_results_meta(const fs::path& path) {
  ResultsMeta meta;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# config_hash: ", 0) == 0)
      meta.config_hash = line.substr(15);
    else if (line.rfind("# master_seed: ", 0) == 0)
      meta.master_seed = std::strtoull(line.substr(15).c_str(), nullptr, 10);
    else if (!line.empty() && line[0] != '#')
      break;
  }
  return meta;
}

void write_population_file(const fs::path& path, const Cell& cell,
                           const std::string& config_hash,
                           std::uint64_t master_seed,
                           const std::vector<Individual>& population) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# problem: " << cell.problem << "\n";
  out << "# algorithm: " << to_string(cell.algorithm) << "\n";
  out << "# repair: " << to_string(cell.repair) << "\n";
  out << "# run: " << cell.run_index << "\n";
  out << "# seed: " << cell.seed << "\n";
  write_provenance(out, config_hash, master_seed);
  out << "# columns: f1 f2 x1 ... xn\n";
  for (const auto& ind : population) {
    for (Eigen::Index i = 0; i < ind.eval.objectives.size(); ++i)
      out << (i ? " " : "") << g17(ind.eval.objectives[i]);
    for (Eigen::Index j = 0; j < ind.x.size(); ++j)
      out << ' ' << g17(ind.x[j]);
    out << '\n';
  }
}

void write_trace_file(const fs::path& path, const Cell& cell,
                      const std::string& config_hash,
                      std::uint64_t master_seed, const RunTrace& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# problem: " << cell.problem << "\n";
  out << "# algorithm: " << to_string(cell.algorithm) << "\n";
  out << "# repair: " << to_string(cell.repair) << "\n";
  out << "# seed: " << cell.seed << "\n";
  write_provenance(out, config_hash, master_seed);
  out << "generation,eval_count,best_violation,mean_violation,igd,hv\n";
  for (const auto& e : trace)
    out << e.generation << ',' << e.eval_count << ',' << g17(e.best_violation)
        << ',' << g17(e.mean_violation) << ',' << g17(e.igd) << ','
        << g17(e.hv) << '\n';
}

RunRecord execute_cell(const Cell& cell, const MatrixSpec& spec,
                       const FrontSet& reference, const Vector& ref_point,
                       std::vector<Individual>* population_out,
                       RunTrace* trace_out) {
  const ProblemSpec problem = make_problem(cell.problem);
  RunConfig config = spec.base;
  config.problem = cell.problem;
  config.algorithm = cell.algorithm;
  config.repair = cell.repair;

  TraceContext trace_ctx;
  const TraceContext* ctx = nullptr;
  if (spec.trace) {
    trace_ctx.reference = &reference;
    trace_ctx.ref_point = ref_point;
    ctx = &trace_ctx;
  }

  RandomStream rng(cell.seed);
  const auto start = std::chrono::steady_clock::now();
  RunOutput out = cell.algorithm == Algorithm::Moead
                      ? moead_cdp_run(problem, cell.repair, config, rng, ctx)
                      : nsga2_cdp_run(problem, cell.repair, config, rng, ctx);
  const auto stop = std::chrono::steady_clock::now();

  RunRecord rec;
  rec.problem = cell.problem;
  rec.algorithm = cell.algorithm;
  rec.repair = cell.repair;
  rec.seed = cell.seed;
  rec.run_index = cell.run_index;
  rec.evals = out.evals;
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  int feasible = 0;
  for (const auto& ind : out.population)
    if (ind.eval.feasible()) ++feasible;
  rec.feasible_fraction =
      static_cast<double>(feasible) / static_cast<double>(out.population.size());

  // Metrics over the feasible non-dominated subset. A run whose final
  // population holds no feasible point records hv = 0 and a NaN IGD
  // sentinel (excluded from table means, counted as failed).
  const FrontSet front = detail::feasible_nondominated_front(out.population);
  rec.hv_value = front.empty() ? 0.0 : hv(front, ref_point);
  rec.igd_value = front.empty() ? std::numeric_limits<double>::quiet_NaN()
                                : igd(reference, front);

  if (population_out) *population_out = std::move(out.population);
  if (trace_out) *trace_out = std::move(out.trace);
  return rec;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

std::uint64_t derive_run_seed(std::uint64_t master_seed,
                              const std::string& problem, Algorithm algorithm,
                              RepairKind repair, int run_index) {
  return RandomStream::derive(
             master_seed, {problem, to_string(algorithm), to_string(repair)},
             static_cast<std::uint64_t>(run_index))
      .seed();
}

std::vector<RunRecord> read_results_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open results: " + path.string());
  std::vector<RunRecord> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("problem,", 0) == 0)
      continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9)
      throw std::runtime_error("malformed results row: " + line);
    RunRecord rec;
    rec.problem = f[0];
    rec.algorithm = algorithm_from_string(f[1]);
    rec.repair = repair_kind_from_string(f[2]);
    rec.seed = std::strtoull(f[3].c_str(), nullptr, 10);
    rec.igd_value = std::strtod(f[4].c_str(), nullptr);
    rec.hv_value = std::strtod(f[5].c_str(), nullptr);
    rec.feasible_fraction = std::strtod(f[6].c_str(), nullptr);
    rec.evals = std::strtoll(f[7].c_str(), nullptr, 10);
    rec.wall_ms = std::strtod(f[8].c_str(), nullptr);
    rows.push_back(std::move(rec));
  }
  return rows;
}

void write_reference_fronts(const fs::path& ref_dir,
                            const std::vector<std::string>& problems,
                            int resolution) {
  fs::create_directories(ref_dir);
  for (const auto& name : problems) {
    const ProblemSpec problem = make_problem(name);
    const FrontSet front = build_reference_front(problem, resolution);
    write_front_file(ref_dir / (name + ".dat"), front,
                     FrontFileMeta{name, resolution});
  }
}

std::vector<CellResult> run_matrix(const MatrixSpec& spec,
                                   const fs::path& out_dir) {
  if (spec.problems.empty() || spec.algorithms.empty() || spec.repairs.empty())
    throw ConfigError("run_matrix: empty problem/algorithm/repair set");
  if (spec.base.runs < 1) throw ConfigError("run_matrix: runs must be >= 1");

  fs::create_directories(out_dir);
  fs::create_directories(out_dir / "populations");
  if (spec.trace) fs::create_directories(out_dir / "traces");

  // Fail fast: every problem needs its reference front before any run.
  std::map<std::string, std::pair<FrontSet, Vector>> references;
  std::vector<std::string> missing;
  for (const auto& name : spec.problems) {
    const fs::path f = out_dir / "reference_fronts" / (name + ".dat");
    if (!fs::exists(f)) {
      missing.push_back(name);
      continue;
    }
    FrontSet front = read_front_file(f);
    Vector ref_point = build_reference_point(front);
    references.emplace(name, std::make_pair(std::move(front), std::move(ref_point)));
  }
  if (!missing.empty()) {
    std::string msg = "run_matrix: missing reference fronts for:";
    for (const auto& name : missing) msg += ' ' + name;
    msg += " (generate them with the reference-fronts command)";
    throw ConfigError(msg);
  }

  std::vector<Cell> cells;
  for (const auto& p : spec.problems)
    for (Algorithm a : spec.algorithms)
      for (RepairKind r : spec.repairs)
        for (int k = 0; k < spec.base.runs; ++k)
          cells.push_back(Cell{p, a, r, k, derive_run_seed(spec.base.seed, p, a, r, k)});

  const std::string config_hash = matrix_config_hash(spec);
  const fs::path results_path = out_dir / "results.csv";

  std::map<CellKey, RunRecord> done;
  if (fs::exists(results_path))
    for (auto& rec : read_results_csv(results_path))
      done.emplace(key_of(rec.problem, rec.algorithm, rec.repair, rec.seed),
                   std::move(rec));

  std::vector<size_t> pending;
  for (size_t i = 0; i < cells.size(); ++i)
    if (!done.count(key_of(cells[i].problem, cells[i].algorithm,
                           cells[i].repair, cells[i].seed)))
      pending.push_back(i);

  // Journal: rows append as cells complete (any order); the file is
  // rewritten in canonical order once the matrix is whole.
  std::ofstream journal;
  if (!fs::exists(results_path)) {
    journal.open(results_path);
    write_provenance(journal, config_hash, spec.base.seed);
    journal << kCsvHeader << "\n";
  } else {
    journal.open(results_path, std::ios::app);
  }
  if (!journal)
    throw std::runtime_error("cannot open " + results_path.string());

  std::mutex io_mutex;
  std::atomic<size_t> cursor{0};
  std::vector<RunRecord> fresh(pending.size());
  std::atomic<bool> failed{false};
  std::string failure_message;

  auto worker = [&]() {
    while (!failed.load()) {
      const size_t slot = cursor.fetch_add(1);
      if (slot >= pending.size()) break;
      const Cell& cell = cells[pending[slot]];
      try {
        const auto& ref = references.at(cell.problem);
        std::vector<Individual> population;
        RunTrace trace;
        RunRecord rec = execute_cell(cell, spec, ref.first, ref.second,
                                     &population, spec.trace ? &trace : nullptr);
        std::lock_guard<std::mutex> lock(io_mutex);
        write_population_file(out_dir / "populations" / population_filename(cell),
                              cell, config_hash, spec.base.seed, population);
        if (spec.trace) {
          fs::path tp = out_dir / "traces" / population_filename(cell);
          tp.replace_extension(".csv");
          write_trace_file(tp, cell, config_hash, spec.base.seed, trace);
        }
        journal << csv_row(rec) << "\n";
        journal.flush();
        fresh[slot] = std::move(rec);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(io_mutex);
        failed.store(true);
        failure_message = e.what();
      }
    }
  };

  const int thread_count =
      std::max(1, std::min(spec.threads, static_cast<int>(pending.size())));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  journal.close();
  if (failed.load())
    throw std::runtime_error("run_matrix: cell failed: " + failure_message);

  for (auto& rec : fresh)
    done.emplace(key_of(rec.problem, rec.algorithm, rec.repair, rec.seed), rec);

  // Canonical rewrite. wall_ms is measured, so byte determinism holds for
  // everything except that column and the '#' metadata header.
  std::ofstream final_csv(results_path);
  write_provenance(final_csv, config_hash, spec.base.seed);
  final_csv << kCsvHeader << "\n";
  std::vector<CellResult> results;
  for (const auto& p : spec.problems)
    for (Algorithm a : spec.algorithms)
      for (RepairKind r : spec.repairs) {
        CellResult cell_result;
        cell_result.config = spec.base;
        cell_result.config.problem = p;
        cell_result.config.algorithm = a;
        cell_result.config.repair = r;
        for (int k = 0; k < spec.base.runs; ++k) {
          const auto it = done.find(
              key_of(p, a, r, derive_run_seed(spec.base.seed, p, a, r, k)));
          if (it == done.end())
            throw std::runtime_error("run_matrix: missing cell after run");
          RunRecord rec = it->second;
          rec.run_index = k;
          final_csv << csv_row(rec) << "\n";
          cell_result.runs.push_back(std::move(rec));
        }
        results.push_back(std::move(cell_result));
      }
  return results;
}

namespace {

struct RepairColumn {
  SampleSummary igd_summary{std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(), 0};
  SampleSummary hv_summary{std::numeric_limits<double>::quiet_NaN(),
                           std::numeric_limits<double>::quiet_NaN(), 0};
  std::vector<double> igd_samples;  // failed runs excluded
  std::vector<double> hv_samples;   // zeros included
  int failed = 0;
  int total = 0;
};

using InstanceRow = std::map<RepairKind, RepairColumn>;

TTestResult safe_t_test(const std::vector<double>& a,
                        const std::vector<double>& b, double alpha) {
  if (a.size() < 2 || b.size() < 2) {
    TTestResult r;
    r.p = std::numeric_limits<double>::quiet_NaN();
    r.h = 0;
    return r;
  }
  return t_test(a, b, alpha);
}

}  // namespace

void make_tables(const fs::path& out_dir, double alpha) {
  const fs::path results_path = out_dir / "results.csv";
  const std::vector<RunRecord> rows = read_results_csv(results_path);
  if (rows.empty()) throw std::runtime_error("make_tables: no results");
  const ResultsMeta meta = read_results_meta(results_path);
  fs::create_directories(out_dir / "tables");

  // Group rows; remember instance order as first seen (canonical in the CSV).
  std::map<Algorithm, std::vector<std::string>> instance_order;
  std::map<Algorithm, std::map<std::string, InstanceRow>> table;
  for (const auto& rec : rows) {
    auto& order = instance_order[rec.algorithm];
    if (std::find(order.begin(), order.end(), rec.problem) == order.end())
      order.push_back(rec.problem);
    RepairColumn& col = table[rec.algorithm][rec.problem][rec.repair];
    ++col.total;
    col.hv_samples.push_back(rec.hv_value);
    if (std::isnan(rec.igd_value))
      ++col.failed;
    else
      col.igd_samples.push_back(rec.igd_value);
  }

  // Completeness: each instance needs all three repair columns with a
  // uniform run count.
  std::vector<std::string> report;
  for (const auto& [alg, instances] : table) {
    int expected = 0;
    for (const auto& [name, row] : instances)
      for (const auto& [repair, col] : row) expected = std::max(expected, col.total);
    for (const auto& name : instance_order[alg]) {
      const auto& row = instances.at(name);
      for (RepairKind r : kAllRepairs) {
        const auto it = row.find(r);
        const int have = it == row.end() ? 0 : it->second.total;
        if (have != expected) {
          std::ostringstream ss;
          ss << name << '/' << to_string(alg) << '/' << to_string(r) << ": "
             << have << " of " << expected << " runs";
          report.push_back(ss.str());
        }
      }
    }
  }
  if (!report.empty()) {
    std::string msg = "make_tables: incomplete matrix:";
    for (const auto& item : report) msg += "\n  missing " + item;
    throw std::runtime_error(msg);
  }

  for (auto& [alg, instances] : table) {
    for (auto& [name, row] : instances)
      for (auto& [repair, col] : row) {
        if (col.igd_samples.size() >= 2)
          col.igd_summary = summarize(col.igd_samples);
        else if (col.igd_samples.size() == 1)
          col.igd_summary = SampleSummary{col.igd_samples[0], 0.0, 1};
        if (col.hv_samples.size() >= 2) col.hv_summary = summarize(col.hv_samples);
      }

    const std::string alg_name(to_string(alg));
    const auto& order = instance_order[alg];

    const auto open_with_meta = [&](const std::string& filename) {
      std::ofstream out(out_dir / "tables" / filename);
      write_provenance(out, meta.config_hash, meta.master_seed);
      return out;
    };

    // Mean/Std tables, CSV and aligned text.
    for (const char* metric : {"igd", "hv"}) {
      const bool is_igd = std::string_view(metric) == "igd";
      auto csv = open_with_meta(std::string(metric) + "_" + alg_name + ".csv");
      csv << "problem";
      for (RepairKind r : kAllRepairs) {
        csv << ',' << to_string(r) << "_mean," << to_string(r) << "_std";
        if (is_igd) csv << ',' << to_string(r) << "_failed";
      }
      csv << "\n";
      auto txt = open_with_meta(std::string(metric) + "_" + alg_name + ".txt");
      txt << (is_igd ? "IGD" : "HV") << " (" << alg_name << ")\n";
      txt << "instance ";
      for (RepairKind r : kAllRepairs)
        txt << "  " << to_string(r) << " mean | std" << (is_igd ? " | failed" : "");
      txt << "\n";
      for (const auto& name : order) {
        csv << name;
        txt << name;
        for (size_t pad = name.size(); pad < 9; ++pad) txt << ' ';
        for (RepairKind r : kAllRepairs) {
          const RepairColumn& col = instances.at(name).at(r);
          const SampleSummary& s = is_igd ? col.igd_summary : col.hv_summary;
          csv << ',' << g17(s.mean) << ',' << g17(s.std);
          if (is_igd) csv << ',' << col.failed;
          txt << "  " << sci2(s.mean) << ' ' << sci2(s.std);
          if (is_igd) txt << "  " << col.failed;
        }
        csv << "\n";
        txt << "\n";
      }
    }

    // Pairwise t-tests: reverse (Repair-C) against clip (A) and reflect (B).
    for (const char* metric : {"igd", "hv"}) {
      const bool is_igd = std::string_view(metric) == "igd";
      auto csv =
          open_with_meta("ttest_" + std::string(metric) + "_" + alg_name + ".csv");
      csv << "problem,reverse_vs_clip_h,reverse_vs_clip_p,"
             "reverse_vs_reflect_h,reverse_vs_reflect_p\n";
      auto txt =
          open_with_meta("ttest_" + std::string(metric) + "_" + alg_name + ".txt");
      txt << (is_igd ? "IGD" : "HV") << " t-tests (" << alg_name
          << ", alpha = " << alpha << ")\n";
      txt << "instance   reverse-vs-clip h,p    reverse-vs-reflect h,p\n";
      for (const auto& name : order) {
        const auto& row = instances.at(name);
        const auto& samples = [&](RepairKind r) -> const std::vector<double>& {
          return is_igd ? row.at(r).igd_samples : row.at(r).hv_samples;
        };
        const TTestResult vs_clip = safe_t_test(samples(RepairKind::Reverse),
                                                samples(RepairKind::Clip), alpha);
        const TTestResult vs_reflect = safe_t_test(
            samples(RepairKind::Reverse), samples(RepairKind::Reflect), alpha);
        csv << name << ',' << vs_clip.h << ',' << g17(vs_clip.p) << ','
            << vs_reflect.h << ',' << g17(vs_reflect.p) << "\n";
        txt << name;
        for (size_t pad = name.size(); pad < 9; ++pad) txt << ' ';
        txt << "  " << vs_clip.h << ' ' << sci2(vs_clip.p) << "       "
            << vs_reflect.h << ' ' << sci2(vs_reflect.p) << "\n";
      }
    }
  }
}

namespace {

void write_boundary_file(const fs::path& path, const std::string& problem_name,
                         const ResultsMeta& meta) {
  const ProblemSpec problem = make_problem(problem_name);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# problem: " << problem_name << "\n";
  write_provenance(out, meta.config_hash, meta.master_seed);
  out << "# constraint boundary polylines, blank-line separated\n";

  if (problem_name.rfind("MCOP", 0) == 0) {
    const EllipseParams& e = mcop_ellipses();
    const double ct = std::cos(e.theta);
    const double st = std::sin(e.theta);
    const double ra = std::sqrt(e.a_sq);
    const double rb = std::sqrt(e.b_sq);
    constexpr int kSegments = 256;
    for (int k = 0; k < 9; ++k) {
      for (int s = 0; s <= kSegments; ++s) {
        const double phi =
            2.0 * std::numbers::pi * (s % kSegments) / kSegments;
        const double u = ra * std::cos(phi);
        const double w = rb * std::sin(phi);
        const double dx = u * ct + w * st;
        const double dy = -u * st + w * ct;
        out << g17(e.cx[static_cast<size_t>(k)] + dx) << ' '
            << g17(e.cy[static_cast<size_t>(k)] + dy) << '\n';
      }
      if (k + 1 < 9) out << '\n';
    }
    return;
  }

  // CTP: per constraint, the lowest boundary branch above f2 = 0.
  const auto& params = ctp_params(problem_name);
  constexpr int kSamples = 512;
  constexpr double kStep = 5e-4;
  constexpr double kCap = 20.0;
  bool first = true;
  for (const auto& p : params) {
    if (!first) out << '\n';
    first = false;
    for (int s = 0; s < kSamples; ++s) {
      const double f1 = static_cast<double>(s) / (kSamples - 1);
      double lo = 0.0;
      const bool lo_feasible = ctp_constraint(f1, lo, p) >= 0.0;
      double hi = lo;
      bool found = false;
      while (hi < kCap) {
        lo = hi;
        hi += kStep;
        if ((ctp_constraint(f1, hi, p) >= 0.0) != lo_feasible) {
          found = true;
          break;
        }
      }
      if (!found) continue;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((ctp_constraint(f1, mid, p) >= 0.0) == lo_feasible)
          lo = mid;
        else
          hi = mid;
      }
      out << g17(f1) << ' ' << g17(hi) << '\n';
    }
  }
}

}  // namespace

void export_plot_data(const fs::path& out_dir) {
  const fs::path results_path = out_dir / "results.csv";
  const std::vector<RunRecord> rows = read_results_csv(results_path);
  if (rows.empty()) throw std::runtime_error("export_plot_data: no results");
  const ResultsMeta meta = read_results_meta(results_path);
  fs::create_directories(out_dir / "plots");

  // Best-HV run per cell; first row wins ties (lowest run index, since the
  // canonical CSV orders runs by index).
  std::map<CellKey, const RunRecord*> best;
  std::vector<CellKey> order;
  std::vector<std::string> problems;
  for (const auto& rec : rows) {
    const CellKey cell{rec.problem, static_cast<int>(rec.algorithm),
                       static_cast<int>(rec.repair), 0};
    auto [it, inserted] = best.emplace(cell, &rec);
    if (inserted)
      order.push_back(cell);
    else if (rec.hv_value > it->second->hv_value)
      it->second = &rec;
    if (std::find(problems.begin(), problems.end(), rec.problem) ==
        problems.end())
      problems.push_back(rec.problem);
  }

  for (const auto& cell : order) {
    const RunRecord& rec = *best.at(cell);
    std::ostringstream pop_name;
    pop_name << rec.problem << '_' << to_string(rec.algorithm) << '_'
             << to_string(rec.repair) << "_seed" << rec.seed << ".dat";
    const FrontSet population =
        read_front_file(out_dir / "populations" / pop_name.str());

    std::ostringstream front_name;
    front_name << "front_" << rec.problem << '_' << to_string(rec.algorithm)
               << '_' << to_string(rec.repair) << ".dat";
    std::ofstream out(out_dir / "plots" / front_name.str());
    out << "# problem: " << rec.problem << "\n";
    out << "# algorithm: " << to_string(rec.algorithm) << "\n";
    out << "# repair: " << to_string(rec.repair) << "\n";
    out << "# seed: " << rec.seed << "\n";
    out << "# hv: " << g17(rec.hv_value) << "\n";
    write_provenance(out, meta.config_hash, meta.master_seed);
    for (const auto& point : population.points)
      out << g17(point[0]) << ' ' << g17(point[1]) << '\n';
  }

  for (const auto& name : problems)
    write_boundary_file(out_dir / "plots" / ("boundary_" + name + ".dat"),
                        name, meta);
}

}  // namespace remo
