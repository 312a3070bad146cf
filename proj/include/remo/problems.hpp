#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "remo/types.hpp"

namespace remo {

/// Six-parameter constraint of the CTP test-problem generator
/// (Deb, Pratap, Meyarivan, EMO 2001; Deb, Wiley 2001).
struct CtpParams {
  double theta;
  double a;
  double b;
  double c;
  double d;
  double e;
};

/// Nine tilted ellipses carved out of the objective space, shared by the
/// whole MCOP suite.
struct EllipseParams {
  std::array<double, 9> cx;
  std::array<double, 9> cy;
  double a_sq;
  double b_sq;
  double theta;
};

/// Rastrigin-style distance function over the nine tail components of a
/// ten-variable CTP instance: 1 + 9 * sum(x^2 - 10 cos(2 pi x) + 10).
double ctp_g(const Vector& x_tail);

/// CTP constraint in ">= 0 feasible" form:
///   cos(t)(f2-e) - sin(t) f1 - a |sin(b pi u^c)|^d,  u = sin(t)(f2-e) + cos(t) f1.
/// u^c is evaluated sign-preserving (odd extension) so the value stays real
/// for negative u with fractional c.
double ctp_constraint(double f1, double f2, const CtpParams& p);

/// One value per ellipse: quadratic form minus 1. A point on or outside an
/// ellipse (feasible) yields a value >= 0.
Vector ellipse_constraints(double f1, double f2, const EllipseParams& p);

/// The shared MCOP constraint system.
const EllipseParams& mcop_ellipses();

/// Constraint parameter sets of a CTP instance (CTP8 has two).
const std::vector<CtpParams>& ctp_params(std::string_view id);

ProblemSpec make_ctp(std::string_view id);   // CTP2 .. CTP8
ProblemSpec make_mcop(std::string_view id);  // MCOP1 .. MCOP7

/// Dispatch by catalog name (either family).
ProblemSpec make_problem(std::string_view id);

/// Catalog names in canonical (table) order: CTP2..CTP8, MCOP1..MCOP7.
const std::vector<std::string>& problem_catalog();

/// Machine-readable catalog: JSON array of
/// {name, n, m, bounds, constraint_count, params}.
std::string problem_manifest_json();

}  // namespace remo
