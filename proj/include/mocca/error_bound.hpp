#pragma once

#include <optional>

#include "mocca/types.hpp"

namespace mocca {

/// Opponent headings, relative to the mean heading, whose rectangle can
/// reach the ego circle although the two collision circles are apart.
struct AngleWindow {
  double phi = 0.0;
  double theta_min = 0.0;
  double theta_max = 0.0;
};

struct ErrorBoundResult {
  double e_approx = 0.0;
  bool circles_overlap = false;
  std::optional<AngleWindow> window;
};

/// Tangent point P2 on the circle of radius r_c around the origin, seen from
/// mu_F. Throws std::domain_error if |mu_F| <= r_c.
Point2 tangent_point(Point2 mu_F, double r_c);

/// Throws std::domain_error if dist < r_c.
AngleWindow collision_angle_window(double dist, double r_c);

/// Wrapped-normal mass of the collision window counted on both rotation
/// sides. Zero when the circles overlap (dist < r_c).
ErrorBoundResult approximation_error(double dist, double r_c, double sigma_theta);

/// Single-period chi-square form 1 - CDF_chi2_1((theta_min / sigma_theta)^2).
/// Requires 0 < 6 sigma_theta <= pi.
double approximation_error_chi(double theta_min, double sigma_theta);

/// Radius margin that pushes theta_min out to n standard deviations of the
/// heading noise. Requires 0 < n sigma_theta < pi / 2.
double safety_distance(double n, double sigma_theta, double r_e, double r_o);

/// Underapproximation bound for a circle pair whose collision radius has been
/// inflated by a safety margin. Overlap is judged against the bare radius
/// r_e + r_o; the window uses the bare radius at max(dist, r_c).
ErrorBoundResult approximation_error_with_margin(double dist, double r_bare, double r_c,
                                                 double sigma_theta);

/// Mass of N(0, sigma^2) on [a, b], accurate in the tails.
double normal_interval_mass(double a, double b, double sigma);

}  // namespace mocca
