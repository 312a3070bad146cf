#include "remo/repair.hpp"

#include <algorithm>

namespace remo {

std::string_view to_string(RepairKind kind) {
  switch (kind) {
    case RepairKind::Clip: return "clip";
    case RepairKind::Reflect: return "reflect";
    case RepairKind::Reverse: return "reverse";
  }
  return "?";
}

RepairKind repair_kind_from_string(std::string_view name) {
  if (name == "clip") return RepairKind::Clip;
  if (name == "reflect") return RepairKind::Reflect;
  if (name == "reverse") return RepairKind::Reverse;
  throw ContractError("unknown repair kind: " + std::string(name));
}

double repair_component(double v, double lower, double upper, RepairKind kind) {
  if (!(lower < upper))
    throw ContractError("repair_component: requires lower < upper");
  if (v >= lower && v <= upper) return v;
  switch (kind) {
    case RepairKind::Clip:
      return v < lower ? lower : upper;
    case RepairKind::Reflect:
      return v < lower ? std::min(upper, 2.0 * lower - v)
                       : std::max(lower, 2.0 * upper - v);
    case RepairKind::Reverse:
      return v < lower ? upper : lower;
  }
  return v;  // unreachable
}

Vector repair_vector(const Vector& x, const Bounds& bounds, RepairKind kind) {
  if (x.size() != bounds.size())
    throw ContractError("repair_vector: length mismatch");
  Vector out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j)
    out[j] = repair_component(x[j], bounds.lower[j], bounds.upper[j], kind);
  return out;
}

}  // namespace remo
