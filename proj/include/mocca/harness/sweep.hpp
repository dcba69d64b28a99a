#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mocca/baselines.hpp"
#include "mocca/harness/scenario.hpp"
#include "mocca/poc.hpp"

namespace mocca::harness {

struct SweepRow {
  ScenarioId scenario = ScenarioId::A1;
  double sweep_value = 0.0;
  Method method = Method::mocca;
  double probability = 0.0;
  double e_approx_bound = 0.0;
  double eval_time_us = 0.0;
};

struct SweepOptions {
  QuadratureParams quad;
  MCParams mc;
  /// Safety margin added to the MoCCA collision radius.
  double safety_distance = 0.0;
  bool record_timing = true;
};

/// Evaluates one method at one pose.
POCResult evaluate(Method method, const VehicleDims& ego, const VehicleDims& opp,
                   const RelativePose& mu, const PoseCovariance& sigma,
                   const SweepOptions& options);

/// One row per (sweep value, method), ordered by sweep value, then by the
/// order of `methods`. Monte Carlo rows use seed = mc.seed XOR sweep index.
std::vector<SweepRow> run_sweep(const Scenario& scenario, const std::vector<Method>& methods,
                                const SweepOptions& options);

inline constexpr const char* kCsvHeader =
    "scenario,sweep_value_m,method,poc,e_approx_bound,eval_time_us";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Writes rows to `path`; throws std::runtime_error naming the path on I/O failure.
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

/// Inverse of write_csv. Throws std::invalid_argument on malformed input.
std::vector<SweepRow> parse_csv(std::istream& in);

}  // namespace mocca::harness
