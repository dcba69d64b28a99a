#include "mocca/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mocca {

namespace {

// Standard normal variates from a seeded mt19937_64. Box-Muller keeps the
// number of engine draws per variate fixed, so streams are reproducible
// across standard library implementations.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // (0, 1] so the log stays finite.
    const double u1 = 1.0 - uniform53();
    const double u2 = uniform53();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double uniform53() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

POCResult pairwise_circle_poc(Point2 ego_center, Point2 opp_center, double opp_offset,
                              const RelativePose& mu, const PoseCovariance& sigma, double r_c,
                              const QuadratureParams& quad) {
  const Cov2 cov = propagate_covariance(sigma, opp_offset, mu.theta);
  const Point2 mu_F = opp_center - ego_center;
  POCResult out;
  out.r_c = r_c;
  out.mu_F_distance = norm(mu_F);
  out.probability = circle_poc(decorrelate(mu_F, cov), r_c, quad);
  return out;
}

}  // namespace

double circumscribed_radius(const VehicleDims& dims) {
  validate(dims);
  return std::hypot(0.5 * dims.length, 0.5 * dims.width);
}

MultiCircleConfig make_multicircle_config(const VehicleDims& dims) {
  validate(dims);
  MultiCircleConfig cfg;
  cfg.count = std::max(1, static_cast<int>(std::ceil(dims.length / dims.width)));
  cfg.radius = std::sqrt(0.5 * dims.width * dims.width);
  const double half = dims.half_span();
  if (cfg.count == 1) {
    cfg.offsets = {0.0};
    return cfg;
  }
  cfg.offsets.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) {
    cfg.offsets.push_back(-half + 2.0 * half * i / (cfg.count - 1));
  }
  return cfg;
}

POCResult unicircle_poc(const VehicleDims& ego, const VehicleDims& opp, const RelativePose& mu,
                        const PoseCovariance& sigma, const QuadratureParams& quad) {
  const double r_c = circumscribed_radius(ego) + circumscribed_radius(opp);
  POCResult out = pairwise_circle_poc({0.0, 0.0}, mu.position(), 0.0, mu, sigma, r_c, quad);
  out.method = Method::unicircle;
  return out;
}

POCResult multicircle_poc(const VehicleDims& ego, const VehicleDims& opp, const RelativePose& mu,
                          const PoseCovariance& sigma, const QuadratureParams& quad) {
  validate(sigma);
  const MultiCircleConfig ego_cfg = make_multicircle_config(ego);
  const MultiCircleConfig opp_cfg = make_multicircle_config(opp);
  const double r_c = ego_cfg.radius + opp_cfg.radius;
  const Point2 heading{std::cos(mu.theta), std::sin(mu.theta)};

  POCResult best;
  best.probability = -1.0;
  for (double ego_offset : ego_cfg.offsets) {
    const Point2 ego_center{ego_offset, 0.0};
    for (double opp_offset : opp_cfg.offsets) {
      const Point2 opp_center = mu.position() + opp_offset * heading;
      const POCResult pair =
          pairwise_circle_poc(ego_center, opp_center, opp_offset, mu, sigma, r_c, quad);
      if (pair.probability > best.probability) {
        best = pair;
      }
    }
  }
  best.method = Method::multicircle;
  return best;
}

bool rectangles_overlap(const VehicleDims& ego, const VehicleDims& opp, double x, double y,
                        double theta) {
  const double ego_hl = 0.5 * ego.length;
  const double ego_hw = 0.5 * ego.width;
  const double opp_hl = 0.5 * opp.length;
  const double opp_hw = 0.5 * opp.width;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double ac = std::abs(c);
  const double as = std::abs(s);

  // Ego axes.
  if (std::abs(x) > ego_hl + opp_hl * ac + opp_hw * as) {
    return false;
  }
  if (std::abs(y) > ego_hw + opp_hl * as + opp_hw * ac) {
    return false;
  }
  // Opponent axes u = (c, s), v = (-s, c).
  if (std::abs(x * c + y * s) > opp_hl + ego_hl * ac + ego_hw * as) {
    return false;
  }
  if (std::abs(-x * s + y * c) > opp_hw + ego_hl * as + ego_hw * ac) {
    return false;
  }
  return true;
}

double mc_standard_error(double p, std::uint64_t samples) {
  if (samples == 0) {
    throw std::invalid_argument("standard error needs at least one sample");
  }
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(samples));
}

POCResult monte_carlo_poc(const VehicleDims& ego, const VehicleDims& opp, const RelativePose& mu,
                          const PoseCovariance& sigma, const MCParams& mc) {
  validate(ego);
  validate(opp);
  validate(sigma);
  if (mc.samples < 1) {
    throw std::invalid_argument("Monte Carlo needs at least one sample");
  }
  const double sx = std::sqrt(sigma.var_x);
  const double sy = std::sqrt(sigma.var_y);
  const double st = std::sqrt(sigma.var_theta);

  NormalStream normal(mc.seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < mc.samples; ++i) {
    const double x = mu.x + sx * normal.next();
    const double y = mu.y + sy * normal.next();
    const double theta = mu.theta + st * normal.next();
    hits += rectangles_overlap(ego, opp, x, y, theta) ? 1 : 0;
  }

  POCResult out;
  out.method = Method::montecarlo;
  out.probability = static_cast<double>(hits) / static_cast<double>(mc.samples);
  out.mu_F_distance = norm(mu.position());
  return out;
}

}  // namespace mocca
