#pragma once

#include <cstdint>
#include <vector>

#include "mocca/poc.hpp"

namespace mocca {

/// Overlapping circles of equal radius placed along a vehicle's centerline.
struct MultiCircleConfig {
  int count = 1;
  double radius = 0.0;
  std::vector<double> offsets;
};

/// ceil(l / w) circles of radius sqrt(w^2 / 2), centers spread uniformly over
/// [-(l - w) / 2, (l - w) / 2].
MultiCircleConfig make_multicircle_config(const VehicleDims& dims);

struct MCParams {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

/// Radius of the circle through the four corners of the footprint.
double circumscribed_radius(const VehicleDims& dims);

POCResult unicircle_poc(const VehicleDims& ego, const VehicleDims& opp, const RelativePose& mu,
                        const PoseCovariance& sigma, const QuadratureParams& quad = {});

/// Maximum pairwise circle POC over all ego x opponent circles.
POCResult multicircle_poc(const VehicleDims& ego, const VehicleDims& opp, const RelativePose& mu,
                          const PoseCovariance& sigma, const QuadratureParams& quad = {});

/// Separating-axis test for the ego footprint at the origin and the opponent
/// footprint at `pose`. Touching rectangles overlap. The heading is used as
/// given, so sampled poses need not be normalized.
bool rectangles_overlap(const VehicleDims& ego, const VehicleDims& opp, double x, double y,
                        double theta);

inline bool rectangles_overlap(const VehicleDims& ego, const VehicleDims& opp,
                               const RelativePose& pose) {
  return rectangles_overlap(ego, opp, pose.x, pose.y, pose.theta);
}

/// Fraction of sampled opponent poses whose footprint overlaps the ego
/// footprint. Bit-exact for a fixed seed: uses std::mt19937_64 and a
/// Box-Muller transform on 53-bit uniforms.
POCResult monte_carlo_poc(const VehicleDims& ego, const VehicleDims& opp, const RelativePose& mu,
                          const PoseCovariance& sigma, const MCParams& mc = {});

/// sqrt(p (1 - p) / n), the standard error of a sampled proportion.
double mc_standard_error(double p, std::uint64_t samples);

}  // namespace mocca
