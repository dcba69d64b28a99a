#pragma once

#include <optional>
#include <string_view>

#include "mocca/geometry.hpp"
#include "mocca/uncertainty.hpp"

namespace mocca {

enum class Method { mocca, unicircle, multicircle, montecarlo };

std::string_view to_string(Method method);
/// Throws std::invalid_argument for unknown names.
Method parse_method(std::string_view name);

/// Collision circle radii. r_c() is the radius of the combined disk that is
/// integrated around the ego circle center.
struct CircleSpec {
  double r_e = 0.0;
  double r_o = 0.0;
  double d_s = 0.0;

  double r_c() const { return r_e + r_o + d_s; }
};

/// Radius sqrt(w^2 / 2) of a circle on the centerline that covers the
/// vehicle's width cross-section.
double centerline_circle_radius(const VehicleDims& dims);

CircleSpec make_circle_spec(const VehicleDims& ego, const VehicleDims& opp, double d_s = 0.0);

struct QuadratureParams {
  int substeps = 80;
};

struct POCResult {
  double probability = 0.0;
  Method method = Method::mocca;
  double mu_F_distance = 0.0;
  double r_c = 0.0;
  double e_approx_bound = 0.0;
  std::optional<ClosestPair> closest;
};

/// Probability mass of the Gaussian described by `frame` inside the disk of
/// radius r_c around the origin. The inner integral is closed with erf and
/// the outer one uses composite midpoint panels, uniform in the angle phi
/// with x = r_c sin(phi).
///
/// Throws std::domain_error if either standard deviation is zero.
double circle_poc(const DecorrelatedFrame& frame, double r_c, const QuadratureParams& quad = {});

/// Moving-circle POC: one circle per vehicle placed at the mutually closest
/// centerline points, with the position covariance propagated to the
/// opponent circle.
POCResult mocca_poc(const VehicleDims& ego, const VehicleDims& opp, const RelativePose& mu,
                    const PoseCovariance& sigma, const CircleSpec& spec,
                    const QuadratureParams& quad = {});

}  // namespace mocca
