#pragma once

#include <array>

#include "mocca/types.hpp"

namespace mocca {

/// Symmetric 2x2 position covariance [[xx, xy], [xy, yy]].
struct Cov2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};

inline constexpr double kPsdTolerance = 1e-12;

/// Gaussian expressed in the eigenbasis of its covariance.
///
/// The covariance satisfies cov = R(rotation) diag(sigma_x^2, sigma_y^2) R(rotation)^T
/// and mu_prime = R(rotation)^T mu_F. sigma_x holds the larger axis.
struct DecorrelatedFrame {
  Point2 mu_prime;
  double sigma_x = 0.0;
  double sigma_y = 0.0;
  double rotation = 0.0;
};

/// Row-major 2x3 Jacobian of F(s) with respect to (x, y, theta).
using Jacobian2x3 = std::array<double, 6>;

Jacobian2x3 jacobian_F(double l_F, double mu_theta);

/// J Sigma J^T for the diagonal pose covariance and the point shifted by l_F
/// along the opponent heading.
Cov2 propagate_covariance(const PoseCovariance& sigma, double l_F, double mu_theta);

/// Closed-form eigen-decomposition of `cov`. Eigenvalues in [-1e-12, 0) are
/// clamped to zero; anything more negative throws std::domain_error.
DecorrelatedFrame decorrelate(Point2 mu_F, const Cov2& cov);

}  // namespace mocca
