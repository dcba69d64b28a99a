#include "mocca/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace mocca {

void validate(const VehicleDims& dims) {
  if (!std::isfinite(dims.length) || !std::isfinite(dims.width) || dims.width <= 0.0 ||
      dims.length <= 0.0) {
    throw std::invalid_argument("vehicle dimensions must be positive and finite");
  }
  if (dims.length < dims.width) {
    throw std::invalid_argument("vehicle length must not be smaller than its width");
  }
}

Segment centerline_segment(const VehicleDims& dims, const RelativePose& pose) {
  validate(dims);
  const double half = dims.half_span();
  const Point2 heading{std::cos(pose.theta), std::sin(pose.theta)};
  const Point2 center = pose.position();
  if (half == 0.0) {
    return {center, center};
  }
  return {center - half * heading, center + half * heading};
}

namespace {

void require_ego_frame(Point2 A, Point2 B) {
  if (std::abs(A.y) > kEgoFrameTolerance || std::abs(B.y) > kEgoFrameTolerance) {
    throw std::invalid_argument("ego segment endpoints must lie on the ego x-axis");
  }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

// Parameter of the foot of `p` on segment [a, b], clamped to [0, 1].
double project_clamped(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) {
    return 0.0;
  }
  return clamp_unit(dot(p - a, ab) / len2);
}

Point2 lerp(Point2 a, Point2 b, double u) { return a + u * (b - a); }

ClosestPair make_pair(Point2 A, Point2 B, Point2 C, Point2 D, double u, double v,
                      bool parallel) {
  ClosestPair out;
  out.E = lerp(A, B, u);
  out.F = lerp(C, D, v);
  out.t = A == B ? 0.0 : 2.0 * u - 1.0;
  out.s = C == D ? 0.0 : 2.0 * v - 1.0;
  out.distance = norm(out.F - out.E);
  out.parallel = parallel;
  return out;
}

ClosestPair parallel_case(Point2 A, Point2 B, Point2 C, Point2 D) {
  const double vA = project_clamped(A, C, D);
  const double vB = project_clamped(B, C, D);
  const double uC = project_clamped(C, A, B);
  const double uD = project_clamped(D, A, B);

  const std::array<double, 4> dists{
      norm(lerp(C, D, vA) - A),
      norm(lerp(C, D, vB) - B),
      norm(C - lerp(A, B, uC)),
      norm(D - lerp(A, B, uD)),
  };
  // Distances within rounding of the minimum count as tied, so the
  // first-match order decides rather than noise from trigonometric poses.
  const double best = *std::min_element(dists.begin(), dists.end());
  const double tied = best + 1e-12 * std::max(1.0, best);

  if (dists[0] <= tied) {
    return make_pair(A, B, C, D, 0.0, vA, true);
  }
  if (dists[1] <= tied) {
    return make_pair(A, B, C, D, 1.0, vB, true);
  }
  if (dists[2] <= tied) {
    return make_pair(A, B, C, D, uC, 0.0, true);
  }
  return make_pair(A, B, C, D, uD, 1.0, true);
}

}  // namespace

DistanceCoeffs distance_coefficients(Point2 A, Point2 B, Point2 C, Point2 D) {
  require_ego_frame(A, B);
  const double ca = C.x - A.x;
  const double dcx = D.x - C.x;
  const double dcy = D.y - C.y;
  const double bax = B.x - A.x;

  DistanceCoeffs c;
  c.c1 = ca * ca + C.y * C.y;
  c.c2 = 2.0 * (ca * dcx + C.y * dcy);
  c.c3 = 2.0 * ca * bax;
  c.c4 = 2.0 * dcx * bax;
  c.c5 = dcx * dcx + dcy * dcy;
  c.c6 = bax * bax;
  return c;
}

ClosestPair closest_points(Point2 A, Point2 B, Point2 C, Point2 D, double eps_parallel) {
  require_ego_frame(A, B);

  const bool ego_point = A == B;
  const bool opp_point = C == D;
  if (ego_point && opp_point) {
    return make_pair(A, B, C, D, 0.0, 0.0, false);
  }
  if (ego_point) {
    return make_pair(A, B, C, D, 0.0, project_clamped(A, C, D), false);
  }
  if (opp_point) {
    return make_pair(A, B, C, D, project_clamped(C, A, B), 0.0, false);
  }

  const Point2 ab = B - A;
  const Point2 cd = D - C;
  if (std::abs(cross(ab, cd)) <= eps_parallel * norm(ab) * norm(cd)) {
    return parallel_case(A, B, C, D);
  }

  const DistanceCoeffs c = distance_coefficients(A, B, C, D);
  const double det = 4.0 * c.c5 * c.c6 - c.c4 * c.c4;

  // Candidates are ranked by the direct point distance; the expanded
  // quadratic cancels badly near intersections.
  struct Candidate {
    double u;
    double v;
    double d;
  };
  auto candidate = [&](double u, double v) {
    return Candidate{u, v, norm(lerp(C, D, v) - lerp(A, B, u))};
  };

  const double v1 = clamp_unit((c.c3 * c.c4 - 2.0 * c.c2 * c.c6) / det);
  const double u1 = clamp_unit((c.c2 + 2.0 * v1 * c.c5) / c.c4);
  const double u2 = clamp_unit((2.0 * c.c3 * c.c5 - c.c2 * c.c4) / det);
  const double v2 = clamp_unit((u2 * c.c4 - c.c2) / (2.0 * c.c5));

  // Printed pairs: pair 1 wins only on strict inequality.
  const bool pair1_ok = std::isfinite(u1) && std::isfinite(v1);
  const bool pair2_ok = std::isfinite(u2) && std::isfinite(v2);
  Candidate best{0.0, 0.0, INFINITY};
  if (pair2_ok) {
    best = candidate(u2, v2);
  }
  if (pair1_ok) {
    const Candidate p1 = candidate(u1, v1);
    if (!pair2_ok || p1.d < best.d) {
      best = p1;
    }
  }

  // Edge minimizers of the convex quadratic over the unit box.
  const std::array<Candidate, 4> edges{
      candidate(0.0, clamp_unit(-c.c2 / (2.0 * c.c5))),
      candidate(1.0, clamp_unit((c.c4 - c.c2) / (2.0 * c.c5))),
      candidate(clamp_unit(c.c3 / (2.0 * c.c6)), 0.0),
      candidate(clamp_unit((c.c3 + c.c4) / (2.0 * c.c6)), 1.0),
  };
  for (const Candidate& e : edges) {
    const double margin = 1e-12 * std::max(1.0, best.d);
    if (!std::isfinite(best.d) || e.d < best.d - margin) {
      best = e;
    }
  }

  return make_pair(A, B, C, D, best.u, best.v, false);
}

}  // namespace mocca
