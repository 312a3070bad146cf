#include "remo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "remo/core.hpp"
#include "remo/version.hpp"

namespace remo {
namespace {

constexpr double kBoundaryScanStep = 5e-4;
constexpr double kBoundaryScanCap = 20.0;
constexpr double kBisectTol = 1e-12;

bool all_feasible(const ProblemSpec& problem, double f1, double f2) {
  const Vector c = problem.objective_constraints(f1, f2);
  return (c.array() >= 0.0).all();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double igd(const FrontSet& reference, const FrontSet& approx) {
  if (reference.empty()) throw ContractError("igd: empty reference set");
  if (approx.empty()) throw ContractError("igd: empty approximation set");
  double total = 0.0;
  for (const auto& y : reference.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : approx.points) {
      const double d = (y - a).norm();
      if (d < best) best = d;
    }
    total += best;
  }
  return total / static_cast<double>(reference.size());
}

double hv(const FrontSet& approx, const Vector& ref_point) {
  if (ref_point.size() != 2)
    throw ContractError("hv: only two objectives are supported");
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(approx.size());
  for (const auto& p : approx.points) {
    if (p.size() != 2) throw ContractError("hv: point dimension mismatch");
    if (!p.allFinite())
      throw ContractError("hv: non-finite objective value in input");
    if (p[0] < ref_point[0] && p[1] < ref_point[1]) pts.emplace_back(p[0], p[1]);
  }
  if (pts.empty()) return 0.0;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  double area = 0.0;
  double prev_f2 = ref_point[1];
  for (const auto& p : pts) {
    if (p[1] >= prev_f2) continue;  // dominated by an earlier point
    area += (ref_point[0] - p[0]) * (prev_f2 - p[1]);
    prev_f2 = p[1];
  }
  return area;
}

FrontSet nondominated_filter(const FrontSet& points) {
  FrontSet out;
  if (points.empty()) return out;
  const Eigen::Index m = points.points.front().size();

  if (m == 2) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(points.size());
    for (const auto& p : points.points) pts.emplace_back(p[0], p[1]);
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
      return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    double best_f2 = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
      if (p[1] >= best_f2) continue;
      best_f2 = p[1];
      Vector v(2);
      v << p[0], p[1];
      out.points.push_back(std::move(v));
    }
    return out;
  }

  // General fallback: pairwise checks with duplicate collapse.
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& p = points.points[i];
    bool keep = true;
    for (size_t j = 0; j < points.size() && keep; ++j) {
      if (j == i) continue;
      if (pareto_dominates(points.points[j], p)) keep = false;
      if (j < i && (points.points[j].array() == p.array()).all())
        keep = false;  // duplicate
    }
    if (keep) out.points.push_back(p);
  }
  return out;
}

FrontSet build_reference_front(const ProblemSpec& problem, int resolution) {
  if (!problem.ideal_curve || !problem.objective_constraints)
    throw CatalogError("build_reference_front: problem lacks catalog data: " +
                       problem.name);
  if (resolution < 2)
    throw ContractError("build_reference_front: resolution must be >= 2");

  FrontSet raw;
  raw.points.reserve(static_cast<size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    const double t = static_cast<double>(k) / (resolution - 1);
    const Eigen::Vector2d p = problem.ideal_curve(t);
    if (all_feasible(problem, p[0], p[1])) {
      Vector v(2);
      v << p[0], p[1];
      raw.points.push_back(std::move(v));
      continue;
    }
    if (problem.front_construction != FrontConstruction::BoundaryScan) continue;

    // Lift the covered sample to the lowest feasible f2 above the curve.
    double lo = p[1];
    double hi = lo;
    bool found = false;
    while (hi < p[1] + kBoundaryScanCap) {
      lo = hi;
      hi += kBoundaryScanStep;
      if (all_feasible(problem, p[0], hi)) {
        found = true;
        break;
      }
    }
    if (!found) continue;
    while (hi - lo > kBisectTol) {
      const double mid = 0.5 * (lo + hi);
      if (all_feasible(problem, p[0], mid))
        hi = mid;
      else
        lo = mid;
    }
    Vector v(2);
    v << p[0], hi;  // feasible end of the bracket
    raw.points.push_back(std::move(v));
  }
  return nondominated_filter(raw);
}

Vector build_reference_point(const FrontSet& reference) {
  if (reference.empty())
    throw ContractError("build_reference_point: empty reference set");
  Vector r = reference.points.front();
  for (const auto& p : reference.points) r = r.cwiseMax(p);
  return r;
}

void write_front_file(const std::filesystem::path& path, const FrontSet& front,
                      const FrontFileMeta& meta) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path.string());
  out << "# problem: " << meta.problem << "\n";
  out << "# resolution: " << meta.resolution << "\n";
  out << "# generator: " << kVersionString << "\n";
  for (const auto& p : front.points) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << format_double(p[i]);
    }
    out << '\n';
  }
}

FrontSet read_front_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open front file: " + path.string());
  FrontSet front;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::vector<double> vals;
    double v;
    while (ss >> v) vals.push_back(v);
    if (vals.empty()) continue;
    Vector p(static_cast<Eigen::Index>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i)
      p[static_cast<Eigen::Index>(i)] = vals[i];
    front.points.push_back(std::move(p));
  }
  return front;
}

}  // namespace remo
