#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "mocca/harness/sweep.hpp"

namespace mocca::harness {

struct TimingStats {
  Method method = Method::mocca;
  double median_us = 0.0;
  double mean_us = 0.0;
  double stddev_us = 0.0;
  std::size_t reps = 0;
};

inline constexpr std::size_t kWarmupReps = 10;
inline constexpr std::size_t kMinBenchmarkReps = 100;

/// Times `reps` single calls of `fn` on the steady clock after kWarmupReps
/// untimed calls. Stats are in microseconds; stddev is the sample deviation.
TimingStats time_calls(const std::function<double()>& fn, std::size_t reps);

TimingStats summarize(std::span<const double> samples_us);

/// Per-method timing at the B1 closest approach. Single-threaded.
std::vector<TimingStats> benchmark(const std::vector<Method>& methods, std::size_t reps,
                                   const QuadratureParams& quad, const MCParams& mc);

struct ScalingPoint {
  int substeps = 0;
  TimingStats stats;
};

/// mocca_poc timing at the B1 closest approach for each substep count.
std::vector<ScalingPoint> substep_scaling(const std::vector<int>& substeps, std::size_t reps);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Plain-text table with Median, Mean and Standard Deviation columns.
void print_timing_table(std::ostream& out, const std::vector<TimingStats>& stats);

}  // namespace mocca::harness
