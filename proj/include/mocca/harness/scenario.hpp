#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mocca/geometry.hpp"
#include "mocca/types.hpp"

namespace mocca::harness {

enum class ScenarioId { A1, A2, A3, B1, B2, B3 };
enum class SweepAxis { relative_x, relative_y, path_parameter };

std::string_view to_string(ScenarioId id);
ScenarioId parse_scenario(std::string_view name);
std::string_view to_string(SweepAxis axis);

inline constexpr double kDefaultStep = 0.1;
inline constexpr double kDefaultRange = 12.0;

struct Scenario {
  ScenarioId id = ScenarioId::A1;
  SweepAxis sweep_axis = SweepAxis::relative_x;
  double range_min = -kDefaultRange;
  double range_max = kDefaultRange;
  double step = kDefaultStep;
  std::function<RelativePose(double)> pose_fn;
  VehicleDims ego;
  VehicleDims opp;
  PoseCovariance sigma;

  /// Multiples k * step inside [range_min, range_max].
  std::vector<double> sweep_values() const;
};

/// Both vehicles 5 m x 2.2 m, pose covariance diag(0.25, 0.25, 0.25) unless the
/// heading standard deviation is overridden.
///
///   A1  head-on, full overlap           mu = (x, 0, pi)
///   A2  head-on, half overlap           mu = (x, 1.1, pi)
///   A3  passing with 1.1 m clearance    mu = (x, 3.3, pi)
///   B1  crossing 1.1 m ahead of ego     mu = (4.7, y, pi/2)
///   B2  crossing through the ego center mu = (0, y, pi/2)
///   B3  both approach the crossing      mu = (p, -p, pi/2)
Scenario build_scenario(ScenarioId id, std::optional<double> sigma_theta_override = {});

}  // namespace mocca::harness
