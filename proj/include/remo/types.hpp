#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>

namespace remo {

using Vector = Eigen::VectorXd;

/// Thrown when a caller breaks a documented precondition (dimension
/// mismatch, out-of-bounds input, invalid interval).
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown for unknown problem identifiers.
struct CatalogError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown for invalid run/matrix configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Per-component box [lower_j, upper_j], inclusive on both ends.
struct Bounds {
  Vector lower;
  Vector upper;

  Eigen::Index size() const { return lower.size(); }

  /// Requires lower_j < upper_j for every component.
  void validate() const {
    if (lower.size() != upper.size())
      throw ContractError("Bounds: lower/upper size mismatch");
    for (Eigen::Index j = 0; j < lower.size(); ++j)
      if (!(lower[j] < upper[j]))
        throw ContractError("Bounds: requires lower < upper per component");
  }

  bool contains(const Vector& x) const {
    if (x.size() != lower.size()) return false;
    return (x.array() >= lower.array()).all() &&
           (x.array() <= upper.array()).all();
  }

  static Bounds unit(Eigen::Index n) {
    return Bounds{Vector::Zero(n), Vector::Ones(n)};
  }
};

/// Objectives plus constraint values in ">= 0 is feasible" form and the
/// aggregate violation sum(max(0, -c_j)).
struct Evaluation {
  Vector objectives;
  Vector constraint_values;
  double violation = 0.0;

  bool feasible() const { return violation == 0.0; }
};

struct Individual {
  Vector x;
  Evaluation eval;
};

enum class FrontConstruction {
  FilterOnly,    // sample the g = 1 curve, drop constraint-violating samples
  BoundaryScan,  // additionally lift covered samples onto the constraint boundary
};

/// A cataloged benchmark problem. The evaluator is a pure function of x.
/// All cataloged constraints act in objective space, so they are exposed
/// separately as a function of (f1, f2); the evaluator composes the two.
struct ProblemSpec {
  std::string name;
  int n = 0;  // decision dimension
  int m = 2;  // objective count
  Bounds bounds;
  int constraint_count = 0;

  std::function<Vector(const Vector&)> objectives;
  std::function<Vector(double, double)> objective_constraints;
  std::function<Evaluation(const Vector&)> evaluator;

  /// g = 1 slice of the attainable objective set, parametrized by
  /// x1 = t in [0, 1]. Used by reference-front construction.
  std::function<Eigen::Vector2d(double)> ideal_curve;
  FrontConstruction front_construction = FrontConstruction::FilterOnly;
};

}  // namespace remo
