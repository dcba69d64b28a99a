#include "mocca/poc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mocca/error_bound.hpp"

namespace mocca {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::mocca:
      return "mocca";
    case Method::unicircle:
      return "unicircle";
    case Method::multicircle:
      return "multicircle";
    case Method::montecarlo:
      return "montecarlo";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::mocca, Method::unicircle, Method::multicircle, Method::montecarlo}) {
    if (name == to_string(m)) {
      return m;
    }
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

double centerline_circle_radius(const VehicleDims& dims) {
  validate(dims);
  return std::sqrt(0.5 * dims.width * dims.width);
}

CircleSpec make_circle_spec(const VehicleDims& ego, const VehicleDims& opp, double d_s) {
  if (!(d_s >= 0.0) || !std::isfinite(d_s)) {
    throw std::invalid_argument("safety distance must be finite and non-negative");
  }
  return {centerline_circle_radius(ego), centerline_circle_radius(opp), d_s};
}

double circle_poc(const DecorrelatedFrame& frame, double r_c, const QuadratureParams& quad) {
  if (quad.substeps < 1) {
    throw std::invalid_argument("quadrature needs at least one substep");
  }
  if (!(r_c > 0.0) || !std::isfinite(r_c)) {
    throw std::invalid_argument("collision radius must be positive and finite");
  }
  if (!(frame.sigma_x > 0.0) || !(frame.sigma_y > 0.0)) {
    throw std::domain_error("degenerate variance: circle_poc needs sigma_x, sigma_y > 0");
  }

  const double mx = frame.mu_prime.x;
  const double my = frame.mu_prime.y;
  const double inv_sx = 1.0 / frame.sigma_x;
  const double ky = 1.0 / (std::numbers::sqrt2 * frame.sigma_y);
  const double px_norm = std::numbers::inv_sqrtpi / std::numbers::sqrt2 * inv_sx;

  // Panels are uniform in phi with x = r_c sin(phi). The half chord then
  // becomes r_c cos(phi), which removes the square-root edge at x = +-r_c
  // that otherwise limits the midpoint rule to O(h^1.5).
  const int n = quad.substeps;
  const double h = std::numbers::pi / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double phi = -0.5 * std::numbers::pi + (i + 0.5) * h;
    const double x = r_c * std::sin(phi);
    const double half_chord = r_c * std::cos(phi);
    const double zx = (x - mx) * inv_sx;
    const double px = px_norm * std::exp(-0.5 * zx * zx);
    sum += px * half_chord *
           (std::erf((half_chord - my) * ky) - std::erf((-half_chord - my) * ky));
  }
  return std::clamp(0.5 * h * sum, 0.0, 1.0);
}

POCResult mocca_poc(const VehicleDims& ego, const VehicleDims& opp, const RelativePose& mu,
                    const PoseCovariance& sigma, const CircleSpec& spec,
                    const QuadratureParams& quad) {
  validate(sigma);
  const Segment ego_seg = centerline_segment(ego, RelativePose{});
  const Segment opp_seg = centerline_segment(opp, mu);
  const ClosestPair pair = closest_points(ego_seg, opp_seg);

  const double l_F = pair.s * opp.half_span();
  const Cov2 cov = propagate_covariance(sigma, l_F, mu.theta);
  const Point2 mu_F = pair.F - pair.E;
  const DecorrelatedFrame frame = decorrelate(mu_F, cov);

  POCResult out;
  out.method = Method::mocca;
  out.r_c = spec.r_c();
  out.probability = circle_poc(frame, out.r_c, quad);
  out.mu_F_distance = norm(mu_F);
  if (out.mu_F_distance > 0.0) {
    out.e_approx_bound =
        approximation_error_with_margin(out.mu_F_distance, spec.r_e + spec.r_o, out.r_c,
                                        std::sqrt(sigma.var_theta))
            .e_approx;
  }
  out.closest = pair;
  return out;
}

}  // namespace mocca
