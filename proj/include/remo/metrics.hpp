#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "remo/types.hpp"

namespace remo {

/// A set of objective-space points. Reference fronts are mutually
/// non-dominated and feasible under the owning problem's constraints.
struct FrontSet {
  std::vector<Vector> points;

  bool empty() const { return points.empty(); }
  size_t size() const { return points.size(); }
};

/// Inverted generational distance: mean over the reference set of the
/// minimum Euclidean distance to the approximation set. Lower is better.
double igd(const FrontSet& reference, const FrontSet& approx);

/// Two-objective hypervolume by sort-and-sweep: the area of the union of
/// rectangles [f1, r1] x [f2, r2] over points that strictly dominate the
/// reference point. Non-finite input is a hard error; points that fail to
/// dominate the reference point contribute nothing.
double hv(const FrontSet& approx, const Vector& ref_point);

/// Maximal mutually non-dominated subset (minimization); duplicates are
/// collapsed.
FrontSet nondominated_filter(const FrontSet& points);

/// Builds the problem's reference front by densely sampling the g = 1
/// curve, discarding constraint-violating samples, lifting covered samples
/// onto the constraint boundary when the problem calls for a boundary scan,
/// and passing the result through nondominated_filter. `resolution` is the
/// pre-filter sample count.
FrontSet build_reference_front(const ProblemSpec& problem, int resolution);

/// Component-wise maximum of the reference front; the hypervolume
/// reference point.
Vector build_reference_point(const FrontSet& reference);

struct FrontFileMeta {
  std::string problem;
  int resolution = 0;
};

/// Plain-text front files: '#'-prefixed metadata header, then one point per
/// line with objectives separated by a single space. Doubles are printed
/// with 17 significant digits so the round-trip is bit-exact.
void write_front_file(const std::filesystem::path& path, const FrontSet& front,
                      const FrontFileMeta& meta);
FrontSet read_front_file(const std::filesystem::path& path);

}  // namespace remo
