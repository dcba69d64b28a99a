#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mocca/baselines.hpp"
#include "mocca/poc.hpp"
#include "oracles.hpp"

using namespace mocca;

namespace {

constexpr VehicleDims kCar{5.0, 2.2};
constexpr PoseCovariance kSigma{0.25, 0.25, 0.25};
const double kRc = 2.0 * std::sqrt(0.5 * 2.2 * 2.2);  // 3.1113 m

DecorrelatedFrame iso(Point2 mu, double sigma) { return {mu, sigma, sigma, 0.0}; }

}  // namespace

TEST_CASE("circle spec from vehicle dims") {
  const CircleSpec spec = make_circle_spec(kCar, kCar);
  CHECK(spec.r_e == doctest::Approx(1.5556).epsilon(1e-4));
  CHECK(spec.r_c() == doctest::Approx(3.1113).epsilon(1e-4));
  CHECK(make_circle_spec(kCar, kCar, 0.2).r_c() == doctest::Approx(spec.r_c() + 0.2));
  CHECK_THROWS_AS(make_circle_spec(kCar, kCar, -0.1), std::invalid_argument);
}

TEST_CASE("circle_poc worked examples") {
  SUBCASE("centered isotropic case matches the Rayleigh CDF") {
    const double p = circle_poc(iso({0, 0}, 0.5), kRc);
    CHECK(p >= 0.9999);
    CHECK(p == doctest::Approx(oracle::rayleigh_cdf(kRc, 0.5)).epsilon(1e-6));
  }
  SUBCASE("far field vanishes") {
    CHECK(circle_poc(iso({20, 0}, 0.5), kRc) < 1e-10);
  }
  SUBCASE("offset mean agrees with a sampled disk estimate") {
    const double p = circle_poc(iso({3.3, 0}, 0.5), kRc);
    const std::uint64_t n = 1000000;
    const double mc = oracle::mc_disk_probability({3.3, 0}, 0.5, 0.5, 0.0, kRc, n, 1);
    CHECK(std::abs(p - mc) <= 3.0 * std::sqrt(mc * (1 - mc) / n));
  }
  SUBCASE("anisotropic rotated frame agrees with a sampled disk estimate") {
    const DecorrelatedFrame f{{1.2, -2.0}, 0.9, 0.4, 0.6};
    const double p = circle_poc(f, 2.5, {2000});
    const std::uint64_t n = 1000000;
    const double mc = oracle::mc_disk_probability({1.2, -2.0}, 0.9, 0.4, 0.0, 2.5, n, 2);
    CHECK(std::abs(p - mc) <= 3.0 * std::sqrt(mc * (1 - mc) / n));
  }
}

TEST_CASE("circle_poc error paths") {
  CHECK_THROWS_AS(circle_poc(iso({0, 0}, 0.0), 1.0), std::domain_error);
  CHECK_THROWS_AS(circle_poc({{0, 0}, 0.5, 0.0, 0.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(circle_poc(iso({0, 0}, 0.5), 1.0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(circle_poc(iso({0, 0}, 0.5), 0.0), std::invalid_argument);
}

TEST_CASE("circle_poc properties over random inputs") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const DecorrelatedFrame f{{8 * u(rng) - 4, 8 * u(rng) - 4},
                              0.5 + u(rng),
                              0.5 + 0.5 * u(rng),
                              kTwoPi * u(rng)};
    const double r = 1.0 + 4.0 * u(rng);
    const double p80 = circle_poc(f, r);
    const double pref = circle_poc(f, r, {10000});
    REQUIRE(p80 >= 0.0);
    REQUIRE(p80 <= 1.0);
    REQUIRE(std::abs(p80 - pref) <= 1e-4);
    // Monotone in the radius.
    REQUIRE(circle_poc(f, r * 1.05, {10000}) >= pref - 1e-12);
  }
}

TEST_CASE("mocca_poc pipeline") {
  const CircleSpec spec = make_circle_spec(kCar, kCar);

  SUBCASE("full overlap saturates") {
    const POCResult r = mocca_poc(kCar, kCar, {0, 0, kPi}, kSigma, spec);
    CHECK(r.probability >= 0.999);
    CHECK(r.method == Method::mocca);
    CHECK(r.e_approx_bound == 0.0);
  }
  SUBCASE("B1 closest approach residual with small heading noise") {
    const POCResult r = mocca_poc(kCar, kCar, {4.7, 0, kPi / 2}, {0.25, 0.25, 0.0025}, spec);
    CHECK(r.probability == doctest::Approx(0.325).epsilon(0.02 / 0.325));
    REQUIRE(r.closest.has_value());
    CHECK(r.closest->E.x == doctest::Approx(1.4));
    CHECK(r.closest->F.x == doctest::Approx(4.7));
    CHECK(r.mu_F_distance == doctest::Approx(3.3));
    CHECK(r.r_c == doctest::Approx(kRc));
  }
  SUBCASE("B1 closest approach error bound with sigma_theta = 0.5") {
    const POCResult r = mocca_poc(kCar, kCar, {4.7, 0, kPi / 2}, kSigma, spec);
    CHECK(r.e_approx_bound == doctest::Approx(0.496).epsilon(0.005 / 0.496));
  }
  SUBCASE("far field") {
    CHECK(mocca_poc(kCar, kCar, {50, 0, 0.3}, kSigma, spec).probability < 1e-9);
    CHECK(mocca_poc(kCar, kCar, {0, 50, 2.0}, kSigma, spec).probability < 1e-9);
  }
  SUBCASE("pipeline composes the building blocks") {
    const RelativePose mu{3.0, 2.0, 0.8};
    const POCResult r = mocca_poc(kCar, kCar, mu, kSigma, spec);
    const ClosestPair pair =
        closest_points(centerline_segment(kCar, {}), centerline_segment(kCar, mu));
    const Cov2 cov = propagate_covariance(kSigma, pair.s * 1.4, mu.theta);
    const double expect = circle_poc(decorrelate(pair.F - pair.E, cov), kRc);
    CHECK(r.probability == expect);
  }
  SUBCASE("safety margin raises the probability") {
    const RelativePose mu{4.7, 0.0, kPi / 2};
    const double bare = mocca_poc(kCar, kCar, mu, kSigma, spec).probability;
    const POCResult inflated =
        mocca_poc(kCar, kCar, mu, kSigma, make_circle_spec(kCar, kCar, 0.3));
    CHECK(inflated.probability > bare);
    CHECK(inflated.r_c == doctest::Approx(kRc + 0.3));
    CHECK(inflated.e_approx_bound < 0.496);
  }
  SUBCASE("square footprints match the single-circle pair") {
    const VehicleDims square{2.2, 2.2};
    const RelativePose mu{2.0, 1.0, 0.4};
    const double m = mocca_poc(square, square, mu, kSigma, make_circle_spec(square, square))
                         .probability;
    const double mc = multicircle_poc(square, square, mu, kSigma).probability;
    CHECK(m == doctest::Approx(mc).epsilon(1e-12));
  }
  SUBCASE("zero position variance is rejected") {
    CHECK_THROWS_AS(mocca_poc(kCar, kCar, {4.7, 0, kPi / 2}, {0.0, 0.25, 0.25}, spec),
                    std::domain_error);
  }
}

TEST_CASE("mocca_poc bounds and mirror symmetry") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const CircleSpec spec = make_circle_spec(kCar, kCar);
  for (int i = 0; i < 2000; ++i) {
    const RelativePose mu{16 * u(rng) - 8, 16 * u(rng) - 8, kTwoPi * u(rng)};
    const PoseCovariance sigma{0.05 + u(rng), 0.05 + u(rng), u(rng)};
    const double p = mocca_poc(kCar, kCar, mu, sigma, spec).probability;
    REQUIRE(p >= 0.0);
    REQUIRE(p <= 1.0);
    const RelativePose mirrored{mu.x, -mu.y, kTwoPi - mu.theta};
    const double q = mocca_poc(kCar, kCar, mirrored, sigma, spec).probability;
    REQUIRE(std::abs(p - q) <= 1e-9);
  }
}
