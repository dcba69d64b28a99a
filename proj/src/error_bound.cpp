#include "mocca/error_bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mocca {

namespace {

constexpr double kWrapTermCutoff = 1e-15;

void require_radius(double r_c) {
  if (!(r_c > 0.0) || !std::isfinite(r_c)) {
    throw std::invalid_argument("collision radius must be positive and finite");
  }
}

}  // namespace

double normal_interval_mass(double a, double b, double sigma) {
  if (b <= a) {
    return 0.0;
  }
  const double k = 1.0 / (std::numbers::sqrt2 * sigma);
  if (a >= 0.0) {
    return 0.5 * (std::erfc(a * k) - std::erfc(b * k));
  }
  if (b <= 0.0) {
    return 0.5 * (std::erfc(-b * k) - std::erfc(-a * k));
  }
  return 0.5 * (std::erf(b * k) - std::erf(a * k));
}

Point2 tangent_point(Point2 mu_F, double r_c) {
  require_radius(r_c);
  const double dist = norm(mu_F);
  if (!(dist > r_c)) {
    throw std::domain_error("tangent point requires |mu_F| > r_c");
  }
  const double bearing = std::atan2(mu_F.y, mu_F.x);
  const Point2 local{r_c * r_c / dist, -r_c * std::sqrt(dist * dist - r_c * r_c) / dist};
  return rotate(local, bearing);
}

AngleWindow collision_angle_window(double dist, double r_c) {
  require_radius(r_c);
  if (!(dist >= r_c)) {
    throw std::domain_error("collision window requires dist >= r_c");
  }
  AngleWindow w;
  w.phi = 2.0 * std::asin(std::min(1.0, r_c / dist));
  w.theta_min = 0.5 * (kPi - w.phi);
  w.theta_max = w.theta_min + w.phi;
  return w;
}

ErrorBoundResult approximation_error(double dist, double r_c, double sigma_theta) {
  require_radius(r_c);
  if (!(dist > 0.0) || !(sigma_theta >= 0.0) || !std::isfinite(sigma_theta)) {
    throw std::invalid_argument("approximation_error needs dist > 0 and sigma_theta >= 0");
  }

  ErrorBoundResult out;
  if (dist < r_c) {
    out.circles_overlap = true;
    return out;
  }

  const AngleWindow w = collision_angle_window(dist, r_c);
  out.window = w;

  if (sigma_theta == 0.0) {
    // Point mass at the mean heading: inside the window only on the boundary.
    out.e_approx = w.theta_min <= 0.0 ? 1.0 : 0.0;
    return out;
  }

  double mass = normal_interval_mass(w.theta_min, w.theta_max, sigma_theta);
  for (int beta = 1;; ++beta) {
    const double shift = kTwoPi * beta;
    const double term =
        normal_interval_mass(w.theta_min + shift, w.theta_max + shift, sigma_theta) +
        normal_interval_mass(w.theta_min - shift, w.theta_max - shift, sigma_theta);
    mass += term;
    if (term < kWrapTermCutoff) {
      break;
    }
  }
  out.e_approx = std::clamp(2.0 * mass, 0.0, 1.0);
  return out;
}

double approximation_error_chi(double theta_min, double sigma_theta) {
  if (!(sigma_theta > 0.0) || 6.0 * sigma_theta > kPi) {
    throw std::domain_error("chi-square form requires 0 < 6 sigma_theta <= pi");
  }
  if (theta_min < 0.0) {
    throw std::invalid_argument("theta_min must be non-negative");
  }
  // CDF_chi2_1(x) = erf(sqrt(x / 2)), so the tail is erfc(theta_min / (sqrt(2) sigma)).
  return std::erfc(theta_min / (std::numbers::sqrt2 * sigma_theta));
}

double safety_distance(double n, double sigma_theta, double r_e, double r_o) {
  if (!(r_e >= 0.0) || !(r_o >= 0.0) || !(r_e + r_o > 0.0)) {
    throw std::invalid_argument("circle radii must be non-negative with a positive sum");
  }
  const double angle = n * sigma_theta;
  if (!(angle > 0.0) || !(angle < 0.5 * kPi)) {
    throw std::domain_error("safety distance requires 0 < n * sigma_theta < pi / 2");
  }
  const double r = r_e + r_o;
  return std::max(0.0, r / std::sin(0.5 * kPi - angle) - r);
}

ErrorBoundResult approximation_error_with_margin(double dist, double r_bare, double r_c,
                                                 double sigma_theta) {
  require_radius(r_bare);
  if (r_c < r_bare) {
    throw std::invalid_argument("inflated radius must not be smaller than the bare radius");
  }
  if (dist < r_bare) {
    ErrorBoundResult out;
    out.circles_overlap = true;
    return out;
  }
  return approximation_error(std::max(dist, r_c), r_bare, sigma_theta);
}

}  // namespace mocca
