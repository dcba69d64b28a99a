#include "mocca/harness/timing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <stdexcept>

namespace mocca::harness {

namespace {

// Keeps the timed calls observable so they are not optimized away.
volatile double g_sink = 0.0;

std::string format_duration(double us) {
  char buf[32];
  if (us >= 1000.0) {
    std::snprintf(buf, sizeof buf, "%.1f ms", us / 1000.0);
  } else {
    std::snprintf(buf, sizeof buf, "%.1f us", us);
  }
  return buf;
}

RelativePose representative_pose() {
  const Scenario b1 = build_scenario(ScenarioId::B1);
  return b1.pose_fn(0.0);
}

}  // namespace

TimingStats summarize(std::span<const double> samples_us) {
  if (samples_us.empty()) {
    throw std::invalid_argument("no timing samples");
  }
  std::vector<double> sorted(samples_us.begin(), samples_us.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  TimingStats stats;
  stats.reps = n;
  stats.median_us = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  stats.mean_us = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : sorted) {
      ss += (v - stats.mean_us) * (v - stats.mean_us);
    }
    stats.stddev_us = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return stats;
}

TimingStats time_calls(const std::function<double()>& fn, std::size_t reps) {
  using Clock = std::chrono::steady_clock;
  for (std::size_t i = 0; i < kWarmupReps; ++i) {
    g_sink = g_sink + fn();
  }
  std::vector<double> samples;
  samples.reserve(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    const double v = fn();
    const auto stop = Clock::now();
    g_sink = g_sink + v;
    samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
  }
  return summarize(samples);
}

std::vector<TimingStats> benchmark(const std::vector<Method>& methods, std::size_t reps,
                                   const QuadratureParams& quad, const MCParams& mc) {
  if (reps < kMinBenchmarkReps) {
    throw std::invalid_argument("benchmark needs at least 100 repetitions");
  }
  const Scenario b1 = build_scenario(ScenarioId::B1);
  const RelativePose mu = representative_pose();
  SweepOptions options;
  options.quad = quad;
  options.mc = mc;

  std::vector<TimingStats> out;
  for (Method method : methods) {
    TimingStats stats = time_calls(
        [&] { return evaluate(method, b1.ego, b1.opp, mu, b1.sigma, options).probability; },
        reps);
    stats.method = method;
    out.push_back(stats);
  }
  return out;
}

std::vector<ScalingPoint> substep_scaling(const std::vector<int>& substeps, std::size_t reps) {
  if (std::set<int>(substeps.begin(), substeps.end()).size() < 4) {
    throw std::invalid_argument("substep scaling needs at least 4 distinct substep counts");
  }
  if (reps < 1) {
    throw std::invalid_argument("substep scaling needs at least one repetition");
  }
  const Scenario b1 = build_scenario(ScenarioId::B1);
  const RelativePose mu = representative_pose();
  const CircleSpec spec = make_circle_spec(b1.ego, b1.opp);

  std::vector<ScalingPoint> out;
  for (int n : substeps) {
    const QuadratureParams quad{n};
    ScalingPoint point;
    point.substeps = n;
    point.stats = time_calls(
        [&] { return mocca_poc(b1.ego, b1.opp, mu, b1.sigma, spec, quad).probability; }, reps);
    point.stats.method = Method::mocca;
    out.push_back(point);
  }
  return out;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("linear fit needs two equally sized series of length >= 2");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("linear fit needs distinct x values");
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

void print_timing_table(std::ostream& out, const std::vector<TimingStats>& stats) {
  char line[128];
  std::snprintf(line, sizeof line, "%-14s|%12s|%12s|%20s\n", "Method", "Median", "Mean",
                "Standard Deviation");
  out << line;
  out << std::string(14, '-') << '+' << std::string(12, '-') << '+' << std::string(12, '-')
      << '+' << std::string(20, '-') << '\n';
  for (const TimingStats& s : stats) {
    std::snprintf(line, sizeof line, "%-14s|%12s|%12s|%20s\n",
                  std::string(to_string(s.method)).c_str(), format_duration(s.median_us).c_str(),
                  format_duration(s.mean_us).c_str(), format_duration(s.stddev_us).c_str());
    out << line;
  }
}

}  // namespace mocca::harness
