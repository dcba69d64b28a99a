// Command-line front end: one-shot POC queries, scenario sweeps, timing
// benchmarks and the error-bound calculator.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mocca/baselines.hpp"
#include "mocca/error_bound.hpp"
#include "mocca/harness/scenario.hpp"
#include "mocca/harness/sweep.hpp"
#include "mocca/harness/timing.hpp"
#include "mocca/poc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitDomain = 3;

using mocca::Method;

std::vector<Method> parse_methods(const std::string& csv) {
  std::vector<Method> methods;
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) {
      methods.push_back(mocca::parse_method(name));
    }
  }
  if (methods.empty()) {
    throw std::invalid_argument("no methods given");
  }
  return methods;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct PocArgs {
  double ego_l = 5.0, ego_w = 2.2, opp_l = 5.0, opp_w = 2.2;
  double mu_x = 0.0, mu_y = 0.0, mu_theta = 0.0;
  double var_x = 0.25, var_y = 0.25, var_theta = 0.25;
  std::string method = "mocca";
  int substeps = 80;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::optional<double> safety_n;
};

int run_poc(const PocArgs& a) {
  const mocca::VehicleDims ego{a.ego_l, a.ego_w};
  const mocca::VehicleDims opp{a.opp_l, a.opp_w};
  const mocca::RelativePose mu{a.mu_x, a.mu_y, a.mu_theta};
  const mocca::PoseCovariance sigma{a.var_x, a.var_y, a.var_theta};
  const Method method = mocca::parse_method(a.method);

  mocca::harness::SweepOptions options;
  options.quad.substeps = a.substeps;
  options.mc = {a.samples, a.seed};
  if (a.safety_n) {
    const mocca::CircleSpec bare = mocca::make_circle_spec(ego, opp);
    options.safety_distance =
        mocca::safety_distance(*a.safety_n, std::sqrt(a.var_theta), bare.r_e, bare.r_o);
  }

  const mocca::POCResult r = mocca::harness::evaluate(method, ego, opp, mu, sigma, options);
  std::cout << "method: " << mocca::to_string(r.method) << '\n'
            << "poc: " << fmt(r.probability) << '\n';
  if (method == Method::montecarlo) {
    std::cout << "standard_error: " << fmt(mocca::mc_standard_error(r.probability, a.samples))
              << '\n';
  } else {
    std::cout << "r_c: " << fmt(r.r_c) << '\n' << "mu_F_distance: " << fmt(r.mu_F_distance) << '\n';
  }
  if (method == Method::mocca) {
    std::cout << "safety_distance: " << fmt(options.safety_distance) << '\n'
              << "e_approx_bound: " << fmt(r.e_approx_bound) << '\n';
    if (r.closest) {
      std::cout << "t: " << fmt(r.closest->t) << '\n'
                << "s: " << fmt(r.closest->s) << '\n'
                << "E: " << fmt(r.closest->E.x) << ' ' << fmt(r.closest->E.y) << '\n'
                << "F: " << fmt(r.closest->F.x) << ' ' << fmt(r.closest->F.y) << '\n';
    }
  }
  return kExitOk;
}

struct SweepArgs {
  std::string scenario;
  std::string methods = "mocca,unicircle,multicircle,montecarlo";
  std::optional<double> sigma_theta;
  double step = mocca::harness::kDefaultStep;
  std::string out;
  bool no_timing = false;
  int substeps = 80;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

int run_sweep_cmd(const SweepArgs& a) {
  mocca::harness::Scenario sc =
      mocca::harness::build_scenario(mocca::harness::parse_scenario(a.scenario), a.sigma_theta);
  sc.step = a.step;
  mocca::harness::SweepOptions options;
  options.quad.substeps = a.substeps;
  options.mc = {a.samples, a.seed};
  options.record_timing = !a.no_timing;

  const auto rows = mocca::harness::run_sweep(sc, parse_methods(a.methods), options);
  if (a.out.empty() || a.out == "-") {
    mocca::harness::write_csv(std::cout, rows);
  } else {
    mocca::harness::emit_csv(rows, a.out);
  }
  return kExitOk;
}

int run_bench(std::size_t reps, const std::string& out, int substeps, std::uint64_t samples) {
  const std::vector<Method> methods{Method::montecarlo, Method::unicircle, Method::multicircle,
                                    Method::mocca};
  const auto stats = mocca::harness::benchmark(methods, reps, {substeps}, {samples, 0});
  mocca::harness::print_timing_table(std::cout, stats);
  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open '" + out + "' for writing");
    }
    file << "method,median_us,mean_us,stddev_us,reps\n";
    for (const auto& s : stats) {
      file << mocca::to_string(s.method) << ',' << fmt(s.median_us) << ',' << fmt(s.mean_us)
           << ',' << fmt(s.stddev_us) << ',' << s.reps << '\n';
    }
    if (!file) {
      throw std::runtime_error("failed writing '" + out + "'");
    }
  }
  return kExitOk;
}

int run_scaling(const std::vector<int>& substeps, std::size_t reps, const std::string& out) {
  const auto points = mocca::harness::substep_scaling(substeps, reps);
  std::vector<double> xs;
  std::vector<double> ys;
  std::ostringstream csv;
  csv << "substeps,median_us,mean_us,stddev_us,reps\n";
  std::printf("%10s %12s %12s %12s\n", "substeps", "median_us", "mean_us", "stddev_us");
  for (const auto& p : points) {
    xs.push_back(p.substeps);
    ys.push_back(p.stats.median_us);
    std::printf("%10d %12.3f %12.3f %12.3f\n", p.substeps, p.stats.median_us, p.stats.mean_us,
                p.stats.stddev_us);
    csv << p.substeps << ',' << fmt(p.stats.median_us) << ',' << fmt(p.stats.mean_us) << ','
        << fmt(p.stats.stddev_us) << ',' << p.stats.reps << '\n';
  }
  const auto fit = mocca::harness::linear_fit(xs, ys);
  std::printf("fit: median_us = %.6g * substeps + %.6g, R^2 = %.4f\n", fit.slope, fit.intercept,
              fit.r_squared);
  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary);
    file << csv.str();
    if (!file) {
      throw std::runtime_error("failed writing '" + out + "'");
    }
  }
  return kExitOk;
}

struct ErrorBoundArgs {
  double dist = 0.0;
  double rc = 0.0;
  double sigma_theta = 0.5;
  std::optional<double> safety_n;
};

int run_error_bound(const ErrorBoundArgs& a) {
  if (a.safety_n) {
    // --rc is the bare radius r_e + r_o here.
    const double d_s = mocca::safety_distance(*a.safety_n, a.sigma_theta, a.rc, 0.0);
    const auto at_margin = mocca::approximation_error(a.rc + d_s, a.rc, a.sigma_theta);
    std::cout << "safety_distance: " << fmt(d_s) << '\n'
              << "r_c_inflated: " << fmt(a.rc + d_s) << '\n'
              << "theta_min: " << fmt(at_margin.window->theta_min) << '\n'
              << "e_approx_at_margin: " << fmt(at_margin.e_approx) << '\n';
    return kExitOk;
  }
  const auto r = mocca::approximation_error(a.dist, a.rc, a.sigma_theta);
  std::cout << "circles_overlap: " << (r.circles_overlap ? "true" : "false") << '\n'
            << "e_approx: " << fmt(r.e_approx) << '\n';
  if (r.window) {
    std::cout << "phi: " << fmt(r.window->phi) << '\n'
              << "theta_min: " << fmt(r.window->theta_min) << '\n'
              << "theta_max: " << fmt(r.window->theta_max) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collision probability of rectangular vehicles under Gaussian pose uncertainty"};
  app.require_subcommand(1);

  PocArgs poc;
  auto* poc_cmd = app.add_subcommand("poc", "Evaluate one method at one relative pose");
  poc_cmd->add_option("--ego-l", poc.ego_l, "Ego length [m]")->capture_default_str();
  poc_cmd->add_option("--ego-w", poc.ego_w, "Ego width [m]")->capture_default_str();
  poc_cmd->add_option("--opp-l", poc.opp_l, "Opponent length [m]")->capture_default_str();
  poc_cmd->add_option("--opp-w", poc.opp_w, "Opponent width [m]")->capture_default_str();
  poc_cmd->add_option("--mu-x", poc.mu_x, "Relative x [m]")->capture_default_str();
  poc_cmd->add_option("--mu-y", poc.mu_y, "Relative y [m]")->capture_default_str();
  poc_cmd->add_option("--mu-theta", poc.mu_theta, "Relative heading [rad]")->capture_default_str();
  poc_cmd->add_option("--var-x", poc.var_x, "Variance of x [m^2]")->capture_default_str();
  poc_cmd->add_option("--var-y", poc.var_y, "Variance of y [m^2]")->capture_default_str();
  poc_cmd->add_option("--var-theta", poc.var_theta, "Variance of heading [rad^2]")
      ->capture_default_str();
  poc_cmd->add_option("--method", poc.method, "mocca|unicircle|multicircle|montecarlo")
      ->capture_default_str();
  poc_cmd->add_option("--substeps", poc.substeps, "Quadrature panels")->capture_default_str();
  poc_cmd->add_option("--samples", poc.samples, "Monte Carlo samples")->capture_default_str();
  poc_cmd->add_option("--seed", poc.seed, "Monte Carlo seed")->capture_default_str();
  poc_cmd->add_option("--safety-n", poc.safety_n,
                      "Add the safety distance for this Mahalanobis multiple (mocca only)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep a scenario and write CSV");
  sweep_cmd->add_option("--scenario", sweep.scenario, "A1, A2, A3, B1, B2 or B3")->required();
  sweep_cmd->add_option("--methods", sweep.methods, "Comma-separated methods")
      ->capture_default_str();
  sweep_cmd->add_option("--sigma-theta", sweep.sigma_theta, "Heading standard deviation [rad]");
  sweep_cmd->add_option("--step", sweep.step, "Sweep step [m]")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output CSV (stdout if omitted)");
  sweep_cmd->add_flag("--no-timing", sweep.no_timing, "Write 0 into the eval_time_us column");
  sweep_cmd->add_option("--substeps", sweep.substeps, "Quadrature panels")->capture_default_str();
  sweep_cmd->add_option("--samples", sweep.samples, "Monte Carlo samples")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Base Monte Carlo seed")->capture_default_str();

  std::size_t bench_reps = 10000;
  std::string bench_out;
  int bench_substeps = 80;
  std::uint64_t bench_samples = 10000;
  auto* bench_cmd = app.add_subcommand("bench", "Time every method at the B1 closest approach");
  bench_cmd->add_option("--reps", bench_reps, "Timed repetitions per method")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "Optional CSV of the timing statistics");
  bench_cmd->add_option("--substeps", bench_substeps, "Quadrature panels")->capture_default_str();
  bench_cmd->add_option("--samples", bench_samples, "Monte Carlo samples")->capture_default_str();

  std::vector<int> scaling_substeps{10, 20, 40, 80, 160, 320};
  std::size_t scaling_reps = 10000;
  std::string scaling_out;
  auto* scaling_cmd = app.add_subcommand("scaling", "Time MoCCA across substep counts");
  scaling_cmd->add_option("--substeps", scaling_substeps, "Comma-separated substep counts")
      ->delimiter(',')
      ->capture_default_str();
  scaling_cmd->add_option("--reps", scaling_reps, "Timed repetitions per count")
      ->capture_default_str();
  scaling_cmd->add_option("--out", scaling_out, "Optional CSV output");

  ErrorBoundArgs eb;
  auto* eb_cmd = app.add_subcommand("error-bound", "Underapproximation bound and safety distance");
  eb_cmd->add_option("--dist", eb.dist, "Distance |mu_F| between circle centers [m]");
  eb_cmd->add_option("--rc", eb.rc, "Collision radius [m]")->required();
  eb_cmd->add_option("--sigma-theta", eb.sigma_theta, "Heading standard deviation [rad]")
      ->capture_default_str();
  eb_cmd->add_option("--safety-n", eb.safety_n,
                     "Report the safety distance for this Mahalanobis multiple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidArgs;
  }

  try {
    if (*poc_cmd) {
      return run_poc(poc);
    }
    if (*sweep_cmd) {
      return run_sweep_cmd(sweep);
    }
    if (*bench_cmd) {
      return run_bench(bench_reps, bench_out, bench_substeps, bench_samples);
    }
    if (*scaling_cmd) {
      return run_scaling(scaling_substeps, scaling_reps, scaling_out);
    }
    if (*eb_cmd) {
      if (!eb.safety_n && eb_cmd->count("--dist") == 0) {
        throw std::invalid_argument("error-bound needs --dist or --safety-n");
      }
      return run_error_bound(eb);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "numerical domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalidArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
