#pragma once

#include <cmath>
#include <numbers>

namespace mocca {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// 2D point or vector in meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double k, Point2 a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

/// Counter-clockwise rotation of `p` by `angle` radians.
inline Point2 rotate(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Wraps an angle into [0, 2*pi).
inline double normalize_angle(double theta) {
  double wrapped = std::fmod(theta, kTwoPi);
  if (wrapped < 0.0) {
    wrapped += kTwoPi;
  }
  // fmod of a tiny negative value can round up to exactly 2*pi
  return wrapped >= kTwoPi ? 0.0 : wrapped;
}

/// Mean pose of the opponent's center relative to the ego center, in the ego frame.
/// Heading is normalized into [0, 2*pi) on construction.
struct RelativePose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  constexpr RelativePose() = default;
  RelativePose(double x_m, double y_m, double theta_rad)
      : x(x_m), y(y_m), theta(normalize_angle(theta_rad)) {}

  Point2 position() const { return {x, y}; }
};

/// Diagonal pose covariance diag(var_x, var_y, var_theta).
struct PoseCovariance {
  double var_x = 0.0;
  double var_y = 0.0;
  double var_theta = 0.0;
};

void validate(const PoseCovariance& sigma);

}  // namespace mocca
