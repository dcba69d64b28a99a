#pragma once

#include "mocca/types.hpp"

namespace mocca {

/// Rectangular vehicle footprint. Requires length >= width > 0.
struct VehicleDims {
  double length = 0.0;
  double width = 0.0;

  /// Half-length of the centerline segment, (length - width) / 2.
  double half_span() const { return 0.5 * (length - width); }
};

void validate(const VehicleDims& dims);

struct Segment {
  Point2 start;
  Point2 end;

  bool degenerate() const { return start == end; }
};

/// Result of the closest-point search. `t` parametrizes the ego segment and
/// `s` the opponent segment, both in [-1, 1] with 0 at the segment midpoint.
struct ClosestPair {
  double t = 0.0;
  double s = 0.0;
  Point2 E;
  Point2 F;
  double distance = 0.0;
  bool parallel = false;
};

/// Coefficients of the squared distance between g(u) = A + u(B - A) and
/// h(v) = C + v(D - C), u, v in [0, 1]:
///   d^2(u, v) = c1 + v c2 - u c3 - u v c4 + v^2 c5 + u^2 c6
/// The closed form assumes A and B lie on the x-axis.
struct DistanceCoeffs {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
  double c6 = 0.0;

  double squared_distance(double u, double v) const {
    return c1 + v * c2 - u * c3 - u * v * c4 + v * v * c5 + u * u * c6;
  }
};

inline constexpr double kDefaultParallelEps = 1e-9;
inline constexpr double kEgoFrameTolerance = 1e-9;

/// Segment of admissible circle centers: pose.center -/+ half_span * heading.
/// Pass a default RelativePose for the ego vehicle.
Segment centerline_segment(const VehicleDims& dims, const RelativePose& pose);

/// Throws std::invalid_argument if A or B is off the ego x-axis.
DistanceCoeffs distance_coefficients(Point2 A, Point2 B, Point2 C, Point2 D);

/// Closest points E on AB and F on CD. AB must lie on the ego x-axis.
///
/// Non-parallel segments evaluate the two clamped stationary-point pairs
/// first, followed by the clamped minimizers on the four edges of the
/// parameter box. Parallel segments use the endpoint-projection case table
/// with first-match selection in the order A, B, C, D.
ClosestPair closest_points(Point2 A, Point2 B, Point2 C, Point2 D,
                           double eps_parallel = kDefaultParallelEps);

inline ClosestPair closest_points(const Segment& ego, const Segment& opp,
                                  double eps_parallel = kDefaultParallelEps) {
  return closest_points(ego.start, ego.end, opp.start, opp.end, eps_parallel);
}

}  // namespace mocca
