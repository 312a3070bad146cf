#pragma once

#include <string_view>

#include "remo/types.hpp"

namespace remo {

/// Box-constraint repair strategies. Boundary equality counts as in-bounds:
/// every rule fires only on strict violations.
///   Clip    — set the violating component to the violated bound.
///   Reflect — mirror the overshoot back inside, saturating at the far
///             bound: below -> min{U, 2L - v}, above -> max{L, 2U - v}.
///   Reverse — set the violating component to the opposite bound:
///             below -> U, above -> L.
enum class RepairKind { Clip, Reflect, Reverse };

std::string_view to_string(RepairKind kind);
RepairKind repair_kind_from_string(std::string_view name);

double repair_component(double v, double lower, double upper, RepairKind kind);

/// Component-wise repair; the result lies in [lower_j, upper_j] everywhere.
Vector repair_vector(const Vector& x, const Bounds& bounds, RepairKind kind);

}  // namespace remo
