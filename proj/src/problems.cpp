#include "remo/problems.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include <nlohmann/json.hpp>

#include "remo/core.hpp"

namespace remo {
namespace {

constexpr double kPi = std::numbers::pi;

double signed_pow(double u, double c) {
  if (u == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(u), c), u);
}

// Parameter sets for CTP2-CTP8 as published in K. Deb, "Multi-Objective
// Optimization using Evolutionary Algorithms", Wiley 2001. CTP8 combines
// a CTP6-like and a CTP7-like constraint.
const std::map<std::string, std::vector<CtpParams>, std::less<>>& ctp_table() {
  static const std::map<std::string, std::vector<CtpParams>, std::less<>> table = {
      {"CTP2", {{-0.2 * kPi, 0.2, 10.0, 1.0, 6.0, 1.0}}},
      {"CTP3", {{-0.2 * kPi, 0.1, 10.0, 1.0, 0.5, 1.0}}},
      {"CTP4", {{-0.2 * kPi, 0.75, 10.0, 1.0, 0.5, 1.0}}},
      {"CTP5", {{-0.2 * kPi, 0.1, 10.0, 2.0, 0.5, 1.0}}},
      {"CTP6", {{0.1 * kPi, 40.0, 0.5, 1.0, 2.0, -2.0}}},
      {"CTP7", {{-0.05 * kPi, 40.0, 5.0, 1.0, 6.0, 0.0}}},
      {"CTP8",
       {{0.1 * kPi, 40.0, 0.5, 1.0, 2.0, -2.0},
        {-0.05 * kPi, 40.0, 2.0, 1.0, 6.0, 0.0}}},
  };
  return table;
}

void finish_spec(ProblemSpec& spec) {
  // The evaluator captures copies of the objective/constraint closures so
  // the spec stays a self-contained value.
  auto objectives = spec.objectives;
  auto constraints = spec.objective_constraints;
  spec.evaluator = [objectives, constraints](const Vector& x) {
    Evaluation ev;
    ev.objectives = objectives(x);
    ev.constraint_values = constraints(ev.objectives[0], ev.objectives[1]);
    ev.violation = aggregate_violation(ev.constraint_values);
    return ev;
  };
}

// ZDT6-style first objective shared by MCOP6/MCOP7.
double bump_f1(double x1) {
  const double s = std::sin(6.0 * kPi * x1);
  const double s2 = s * s;
  return 1.0 - std::exp(-4.0 * x1) * (s2 * s2 * s2);
}

// g formulas of Table rows MCOP1..MCOP7 (index by suite position).
double mcop_g(int id, const Vector& x) {
  const int n = static_cast<int>(x.size());
  const auto tail_mean = [&] {
    double s = 0.0;
    for (int i = 1; i < n; ++i) s += x[i];
    return s / (n - 1);
  };
  switch (id) {
    case 1:
    case 2:
      return 1.0 + 9.0 * tail_mean();
    case 3:
      return 1.0 + 9.0 * std::pow(tail_mean(), 0.25);
    default: {  // MCOP4..MCOP7 share a multimodal Rastrigin-like g
      double s = 0.0;
      for (int i = 1; i < n; ++i)
        s += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
      return 1.0 + 10.0 * (n - 1) + s;
    }
  }
}

}  // namespace

double ctp_g(const Vector& x_tail) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x_tail.size(); ++i) {
    const double xi = x_tail[i];
    s += xi * xi - 10.0 * std::cos(2.0 * kPi * xi) + 10.0;
  }
  return 1.0 + 9.0 * s;
}

double ctp_constraint(double f1, double f2, const CtpParams& p) {
  const double lhs =
      std::cos(p.theta) * (f2 - p.e) - std::sin(p.theta) * f1;
  const double u = std::sin(p.theta) * (f2 - p.e) + std::cos(p.theta) * f1;
  const double rhs =
      p.a * std::pow(std::abs(std::sin(p.b * kPi * signed_pow(u, p.c))), p.d);
  return lhs - rhs;
}

Vector ellipse_constraints(double f1, double f2, const EllipseParams& p) {
  Vector out(9);
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  for (int k = 0; k < 9; ++k) {
    const double dx = f1 - p.cx[k];
    const double dy = f2 - p.cy[k];
    const double u = dx * ct - dy * st;
    const double w = dx * st + dy * ct;
    out[k] = u * u / p.a_sq + w * w / p.b_sq - 1.0;
  }
  return out;
}

const EllipseParams& mcop_ellipses() {
  static const EllipseParams params{
      {0.0, 1.0, 0.0, 1.0, 2.0, 0.0, 1.0, 2.0, 3.0},
      {1.5, 0.5, 2.5, 1.5, 0.5, 3.5, 2.5, 1.5, 0.5},
      0.1,
      0.2,
      -0.25 * kPi,
  };
  return params;
}

const std::vector<CtpParams>& ctp_params(std::string_view id) {
  auto it = ctp_table().find(id);
  if (it == ctp_table().end())
    throw CatalogError("unknown CTP instance: " + std::string(id));
  return it->second;
}

ProblemSpec make_ctp(std::string_view id) {
  const auto& params = ctp_params(id);

  ProblemSpec spec;
  spec.name = std::string(id);
  spec.n = 10;
  spec.m = 2;
  spec.bounds = Bounds::unit(10);
  spec.constraint_count = static_cast<int>(params.size());
  spec.objectives = [](const Vector& x) {
    const double f1 = x[0];
    const double g = ctp_g(x.tail(x.size() - 1));
    Eigen::Vector2d f;
    f << f1, g * (1.0 - std::sqrt(f1 / g));
    return Vector(f);
  };
  spec.objective_constraints = [params](double f1, double f2) {
    Vector out(params.size());
    for (size_t k = 0; k < params.size(); ++k)
      out[static_cast<Eigen::Index>(k)] = ctp_constraint(f1, f2, params[k]);
    return out;
  };
  spec.ideal_curve = [](double t) {
    return Eigen::Vector2d(t, 1.0 - std::sqrt(t));
  };
  spec.front_construction = FrontConstruction::BoundaryScan;
  finish_spec(spec);
  return spec;
}

ProblemSpec make_mcop(std::string_view id) {
  int index = 0;
  if (id.size() == 5 && id.substr(0, 4) == "MCOP" && id[4] >= '1' &&
      id[4] <= '7')
    index = id[4] - '0';
  if (index == 0)
    throw CatalogError("unknown MCOP instance: " + std::string(id));

  ProblemSpec spec;
  spec.name = std::string(id);
  spec.n = (index <= 2) ? 30 : 10;
  spec.m = 2;
  spec.bounds = Bounds::unit(spec.n);
  spec.constraint_count = 9;

  spec.objectives = [index](const Vector& x) {
    const double g = mcop_g(index, x);
    double f1 = 0.0;
    double f2 = 0.0;
    switch (index) {
      case 1:
        f1 = g * x[0];
        f2 = g * (1.0 - std::sqrt(f1 / g));
        break;
      case 2:
        f1 = g * x[0];
        f2 = g * (1.0 - (f1 / g) * (f1 / g));
        break;
      case 3:
        // f1 is printed unscaled by g in this row of the suite.
        f1 = x[0];
        f2 = g * (1.0 - std::sqrt(f1 / g)) - f1 * std::sin(10.0 * kPi * f1);
        break;
      case 4:
        f1 = g * x[0];
        f2 = g * (1.0 - std::sqrt(f1 / g));
        break;
      case 5:
        f1 = g * x[0];
        f2 = g * (1.0 - (f1 / g) * (f1 / g));
        break;
      case 6:
        f1 = bump_f1(x[0]);
        f2 = g * (1.0 - (f1 / g) * (f1 / g));
        break;
      case 7:
        f1 = bump_f1(x[0]);
        f2 = g * (1.0 - std::sqrt(f1 / g));
        break;
    }
    Eigen::Vector2d f;
    f << f1, f2;
    return Vector(f);
  };
  spec.objective_constraints = [](double f1, double f2) {
    return ellipse_constraints(f1, f2, mcop_ellipses());
  };
  spec.ideal_curve = [index](double t) {
    double f1 = t;
    if (index >= 6) f1 = bump_f1(t);
    double f2 = 0.0;
    switch (index) {
      case 1:
      case 4:
      case 7:
        f2 = 1.0 - std::sqrt(f1);
        break;
      case 2:
      case 5:
      case 6:
        f2 = 1.0 - f1 * f1;
        break;
      case 3:
        f2 = 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1);
        break;
    }
    return Eigen::Vector2d(f1, f2);
  };
  spec.front_construction = FrontConstruction::FilterOnly;
  finish_spec(spec);
  return spec;
}

ProblemSpec make_problem(std::string_view id) {
  if (id.substr(0, 3) == "CTP") return make_ctp(id);
  if (id.substr(0, 4) == "MCOP") return make_mcop(id);
  throw CatalogError("unknown problem: " + std::string(id));
}

const std::vector<std::string>& problem_catalog() {
  static const std::vector<std::string> names = {
      "CTP2",  "CTP3",  "CTP4",  "CTP5",  "CTP6",  "CTP7",  "CTP8",
      "MCOP1", "MCOP2", "MCOP3", "MCOP4", "MCOP5", "MCOP6", "MCOP7",
  };
  return names;
}

std::string problem_manifest_json() {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& name : problem_catalog()) {
    const ProblemSpec spec = make_problem(name);
    nlohmann::json entry;
    entry["name"] = spec.name;
    entry["n"] = spec.n;
    entry["m"] = spec.m;
    nlohmann::json bounds = nlohmann::json::array();
    for (Eigen::Index j = 0; j < spec.bounds.size(); ++j)
      bounds.push_back({spec.bounds.lower[j], spec.bounds.upper[j]});
    entry["bounds"] = bounds;
    entry["constraint_count"] = spec.constraint_count;
    if (name.substr(0, 3) == "CTP") {
      nlohmann::json cons = nlohmann::json::array();
      for (const auto& p : ctp_params(name))
        cons.push_back({{"theta", p.theta},
                        {"a", p.a},
                        {"b", p.b},
                        {"c", p.c},
                        {"d", p.d},
                        {"e", p.e}});
      entry["params"] = {{"ctp_constraints", cons}};
    } else {
      const auto& e = mcop_ellipses();
      entry["params"] = {{"ellipses",
                          {{"cx", e.cx},
                           {"cy", e.cy},
                           {"a_sq", e.a_sq},
                           {"b_sq", e.b_sq},
                           {"theta", e.theta}}}};
    }
    doc.push_back(entry);
  }
  return doc.dump(2);
}

}  // namespace remo
