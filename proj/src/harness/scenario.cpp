#include "mocca/harness/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mocca::harness {

namespace {

constexpr VehicleDims kCar{5.0, 2.2};
constexpr double kPositionVariance = 0.25;
constexpr double kHeadingVariance = 0.25;
constexpr double kClearance = 1.1;

constexpr ScenarioId kAllIds[] = {ScenarioId::A1, ScenarioId::A2, ScenarioId::A3,
                                  ScenarioId::B1, ScenarioId::B2, ScenarioId::B3};

}  // namespace

std::string_view to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::A1:
      return "A1";
    case ScenarioId::A2:
      return "A2";
    case ScenarioId::A3:
      return "A3";
    case ScenarioId::B1:
      return "B1";
    case ScenarioId::B2:
      return "B2";
    case ScenarioId::B3:
      return "B3";
  }
  return "?";
}

ScenarioId parse_scenario(std::string_view name) {
  for (ScenarioId id : kAllIds) {
    if (name == to_string(id)) {
      return id;
    }
  }
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::relative_x:
      return "relative_x";
    case SweepAxis::relative_y:
      return "relative_y";
    case SweepAxis::path_parameter:
      return "path_parameter";
  }
  return "?";
}

std::vector<double> Scenario::sweep_values() const {
  if (!(step > 0.0) || !(range_max >= range_min)) {
    throw std::invalid_argument("sweep needs step > 0 and a non-empty range");
  }
  // Integer multiples of the step, so 0 and +/- pairs are hit exactly.
  const auto first = static_cast<long>(std::ceil(range_min / step - 1e-9));
  const auto last = static_cast<long>(std::floor(range_max / step + 1e-9));
  std::vector<double> values;
  for (long k = first; k <= last; ++k) {
    values.push_back(static_cast<double>(k) * step);
  }
  if (values.empty()) {
    throw std::invalid_argument("sweep range contains no step multiple");
  }
  return values;
}

Scenario build_scenario(ScenarioId id, std::optional<double> sigma_theta_override) {
  Scenario sc;
  sc.id = id;
  sc.ego = kCar;
  sc.opp = kCar;
  sc.sigma = {kPositionVariance, kPositionVariance, kHeadingVariance};
  if (sigma_theta_override) {
    if (!(*sigma_theta_override >= 0.0) || !std::isfinite(*sigma_theta_override)) {
      throw std::invalid_argument("sigma_theta override must be finite and non-negative");
    }
    sc.sigma.var_theta = *sigma_theta_override * *sigma_theta_override;
  }

  // Lateral offsets of the opponent centerline for the passing and crossing cases.
  const double half_overlap = 0.5 * kCar.width;
  const double passing_offset = kClearance + kCar.width;
  const double crossing_offset = 0.5 * kCar.length + kClearance + 0.5 * kCar.width;

  switch (id) {
    case ScenarioId::A1:
      sc.sweep_axis = SweepAxis::relative_x;
      sc.pose_fn = [](double x) { return RelativePose{x, 0.0, kPi}; };
      break;
    case ScenarioId::A2:
      sc.sweep_axis = SweepAxis::relative_x;
      sc.pose_fn = [half_overlap](double x) { return RelativePose{x, half_overlap, kPi}; };
      break;
    case ScenarioId::A3:
      sc.sweep_axis = SweepAxis::relative_x;
      sc.pose_fn = [passing_offset](double x) { return RelativePose{x, passing_offset, kPi}; };
      break;
    case ScenarioId::B1:
      sc.sweep_axis = SweepAxis::relative_y;
      sc.pose_fn = [crossing_offset](double y) {
        return RelativePose{crossing_offset, y, 0.5 * kPi};
      };
      break;
    case ScenarioId::B2:
      sc.sweep_axis = SweepAxis::relative_y;
      sc.pose_fn = [](double y) { return RelativePose{0.0, y, 0.5 * kPi}; };
      break;
    case ScenarioId::B3:
      sc.sweep_axis = SweepAxis::path_parameter;
      sc.pose_fn = [](double p) { return RelativePose{p, -p, 0.5 * kPi}; };
      break;
  }
  return sc;
}

}  // namespace mocca::harness
