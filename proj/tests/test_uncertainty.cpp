#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mocca/poc.hpp"
#include "mocca/uncertainty.hpp"

using namespace mocca;

namespace {

constexpr PoseCovariance kSigma{0.25, 0.25, 0.25};

Cov2 reconstruct(const DecorrelatedFrame& f) {
  const double c = std::cos(f.rotation);
  const double s = std::sin(f.rotation);
  const double a = f.sigma_x * f.sigma_x;
  const double b = f.sigma_y * f.sigma_y;
  return {c * c * a + s * s * b, c * s * (a - b), s * s * a + c * c * b};
}

// J Sigma J^T by explicit matrix products.
Cov2 propagate_by_matrices(const Jacobian2x3& j, const PoseCovariance& sigma) {
  const double d[3] = {sigma.var_x, sigma.var_y, sigma.var_theta};
  double out[2][2] = {};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k < 3; ++k) {
        out[r][c] += j[3 * r + k] * d[k] * j[3 * c + k];
      }
    }
  }
  return {out[0][0], out[0][1], out[1][1]};
}

}  // namespace

TEST_CASE("relative pose heading normalization") {
  CHECK(RelativePose(0, 0, -kPi / 2).theta == doctest::Approx(1.5 * kPi));
  CHECK(RelativePose(0, 0, kTwoPi).theta == 0.0);
  CHECK(RelativePose(0, 0, 5 * kTwoPi + 1.0).theta == doctest::Approx(1.0));
  CHECK(RelativePose(0, 0, -1e-18).theta < kTwoPi);
  CHECK(RelativePose(0, 0, -1e-18).theta >= 0.0);
}

TEST_CASE("jacobian of the shifted circle center") {
  const auto j0 = jacobian_F(0.0, 1.234);
  CHECK(j0 == Jacobian2x3{1, 0, -0.0, 0, 1, 0.0});

  const auto j1 = jacobian_F(1.4, 0.0);
  CHECK(j1[2] == doctest::Approx(0.0));
  CHECK(j1[5] == doctest::Approx(1.4));

  const auto j2 = jacobian_F(1.4, kPi / 2);
  CHECK(j2[2] == doctest::Approx(-1.4));
  CHECK(std::abs(j2[5]) < 1e-15);
}

TEST_CASE("covariance propagation") {
  SUBCASE("no shift keeps the position block") {
    const Cov2 c = propagate_covariance(kSigma, 0.0, 0.7);
    CHECK(c.xx == 0.25);
    CHECK(c.xy == 0.0);
    CHECK(c.yy == 0.25);
  }
  SUBCASE("shift along x heading inflates y") {
    const Cov2 c = propagate_covariance(kSigma, 1.4, 0.0);
    CHECK(c.xx == doctest::Approx(0.25));
    CHECK(c.xy == doctest::Approx(0.0));
    CHECK(c.yy == doctest::Approx(0.74));
  }
  SUBCASE("diagonal heading couples the axes") {
    const Cov2 c = propagate_covariance(kSigma, 1.4, kPi / 4);
    CHECK(c.xx == doctest::Approx(0.495));
    CHECK(c.xy == doctest::Approx(-0.245));
    CHECK(c.yy == doctest::Approx(0.495));
  }
  SUBCASE("closed form equals J Sigma J^T") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const PoseCovariance s{u(rng), u(rng), u(rng)};
      const double l = 4.0 * u(rng) - 2.0;
      const double th = kTwoPi * u(rng);
      const Cov2 a = propagate_covariance(s, l, th);
      const Cov2 b = propagate_by_matrices(jacobian_F(l, th), s);
      REQUIRE(a.xx == doctest::Approx(b.xx));
      REQUIRE(a.xy == doctest::Approx(b.xy));
      REQUIRE(a.yy == doctest::Approx(b.yy));
      REQUIRE(a.xx >= 0.0);
      REQUIRE(a.yy >= 0.0);
      REQUIRE(a.xx * a.yy - a.xy * a.xy >= -1e-12);
      // Periodic in the heading.
      const Cov2 p = propagate_covariance(s, l, th + kTwoPi);
      REQUIRE(std::abs(p.xx - a.xx) <= 1e-14);
      REQUIRE(std::abs(p.xy - a.xy) <= 1e-14);
      REQUIRE(std::abs(p.yy - a.yy) <= 1e-14);
    }
  }
  SUBCASE("rejects negative variances") {
    CHECK_THROWS_AS(propagate_covariance({-0.1, 0.25, 0.25}, 0.0, 0.0), std::invalid_argument);
  }
}

TEST_CASE("eigen decorrelation") {
  SUBCASE("larger eigenvalue on the x' axis") {
    const DecorrelatedFrame f = decorrelate({3.3, 0.0}, {0.25, 0.0, 0.74});
    CHECK(f.sigma_x == doctest::Approx(std::sqrt(0.74)));
    CHECK(f.sigma_y == doctest::Approx(0.5));
    CHECK(f.rotation == doctest::Approx(kPi / 2));
    CHECK(std::abs(f.mu_prime.x) < 1e-12);
    CHECK(std::abs(f.mu_prime.y) == doctest::Approx(3.3));
  }
  SUBCASE("isotropic covariance keeps the axes") {
    const DecorrelatedFrame f = decorrelate({1.0, -2.0}, {0.3, 0.0, 0.3});
    CHECK(f.rotation == 0.0);
    CHECK(f.mu_prime == Point2{1.0, -2.0});
    CHECK(f.sigma_x == doctest::Approx(std::sqrt(0.3)));
    CHECK(f.sigma_y == doctest::Approx(std::sqrt(0.3)));
  }
  SUBCASE("eigenvalues 3 and 1 at 45 degrees") {
    const DecorrelatedFrame f = decorrelate({}, {2.0, 1.0, 2.0});
    CHECK(f.sigma_x * f.sigma_x == doctest::Approx(3.0));
    CHECK(f.sigma_y * f.sigma_y == doctest::Approx(1.0));
    CHECK(f.rotation == doctest::Approx(kPi / 4));
  }
  SUBCASE("tiny negative eigenvalue is clamped, larger ones rejected") {
    const DecorrelatedFrame f = decorrelate({}, {1.0, 1.0, 1.0 - 1e-13});
    CHECK(f.sigma_y == 0.0);
    CHECK_THROWS_AS(decorrelate({}, {1.0, 1.0, 0.9}), std::domain_error);
    CHECK_THROWS_AS(decorrelate({}, {-1.0, 0.0, 1.0}), std::domain_error);
  }
}

TEST_CASE("decorrelation reconstructs random PSD covariances") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    // A A^T with A having entries in [-1, 1] is PSD.
    const double a = 2 * u(rng) - 1, b = 2 * u(rng) - 1, c = 2 * u(rng) - 1, d = 2 * u(rng) - 1;
    const Cov2 cov{a * a + b * b, a * c + b * d, c * c + d * d};
    const Point2 mu{4 * u(rng) - 2, 4 * u(rng) - 2};
    const DecorrelatedFrame f = decorrelate(mu, cov);
    const Cov2 back = reconstruct(f);
    REQUIRE(std::abs(back.xx - cov.xx) <= 1e-12);
    REQUIRE(std::abs(back.xy - cov.xy) <= 1e-12);
    REQUIRE(std::abs(back.yy - cov.yy) <= 1e-12);
    REQUIRE(f.sigma_x >= f.sigma_y);
    const Point2 mu_back = rotate(f.mu_prime, f.rotation);
    REQUIRE(norm(mu_back - mu) <= 1e-12);
  }
}

TEST_CASE("downstream POC is invariant under a joint rigid rotation") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const QuadratureParams fine{10000};
  for (int i = 0; i < 50; ++i) {
    const double a = 0.3 + u(rng), b = 0.6 * u(rng) - 0.3, c = 0.3 + u(rng);
    const Cov2 cov{a * a + b * b, b * (a + c), c * c + b * b};
    const Point2 mu{6 * u(rng) - 3, 6 * u(rng) - 3};
    const double r_c = 1.0 + 3.0 * u(rng);
    const double alpha = kTwoPi * u(rng);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const Cov2 rotated{ca * ca * cov.xx - 2 * ca * sa * cov.xy + sa * sa * cov.yy,
                       ca * sa * (cov.xx - cov.yy) + (ca * ca - sa * sa) * cov.xy,
                       sa * sa * cov.xx + 2 * ca * sa * cov.xy + ca * ca * cov.yy};
    const double p0 = circle_poc(decorrelate(mu, cov), r_c, fine);
    const double p1 = circle_poc(decorrelate(rotate(mu, alpha), rotated), r_c, fine);
    REQUIRE(std::abs(p0 - p1) < 1e-6);
  }
}
