#include "mocca/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mocca {

void validate(const PoseCovariance& sigma) {
  const bool finite =
      std::isfinite(sigma.var_x) && std::isfinite(sigma.var_y) && std::isfinite(sigma.var_theta);
  if (!finite || sigma.var_x < 0.0 || sigma.var_y < 0.0 || sigma.var_theta < 0.0) {
    throw std::invalid_argument("pose variances must be finite and non-negative");
  }
}

Jacobian2x3 jacobian_F(double l_F, double mu_theta) {
  return {1.0, 0.0, -l_F * std::sin(mu_theta),  //
          0.0, 1.0, l_F * std::cos(mu_theta)};
}

Cov2 propagate_covariance(const PoseCovariance& sigma, double l_F, double mu_theta) {
  validate(sigma);
  const double sn = std::sin(mu_theta);
  const double cs = std::cos(mu_theta);
  const double k = l_F * l_F * sigma.var_theta;
  return {sigma.var_x + k * sn * sn, -k * sn * cs, sigma.var_y + k * cs * cs};
}

DecorrelatedFrame decorrelate(Point2 mu_F, const Cov2& cov) {
  const double mean = 0.5 * (cov.xx + cov.yy);
  const double half_diff = 0.5 * (cov.xx - cov.yy);
  const double radius = std::hypot(half_diff, cov.xy);
  double major = mean + radius;
  double minor = mean - radius;

  if (!std::isfinite(major) || minor < -kPsdTolerance || cov.xx < -kPsdTolerance ||
      cov.yy < -kPsdTolerance) {
    throw std::domain_error("covariance is not positive semi-definite");
  }
  major = std::max(major, 0.0);
  minor = std::max(minor, 0.0);

  DecorrelatedFrame frame;
  // Equal eigenvalues leave the eigenbasis arbitrary; keep the input axes.
  frame.rotation = radius == 0.0 ? 0.0 : 0.5 * std::atan2(2.0 * cov.xy, cov.xx - cov.yy);
  frame.sigma_x = std::sqrt(major);
  frame.sigma_y = std::sqrt(minor);
  frame.mu_prime = rotate(mu_F, -frame.rotation);
  return frame;
}

}  // namespace mocca
