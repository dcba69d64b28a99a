#include "mocca/harness/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mocca::harness {

POCResult evaluate(Method method, const VehicleDims& ego, const VehicleDims& opp,
                   const RelativePose& mu, const PoseCovariance& sigma,
                   const SweepOptions& options) {
  switch (method) {
    case Method::mocca:
      return mocca_poc(ego, opp, mu, sigma, make_circle_spec(ego, opp, options.safety_distance),
                       options.quad);
    case Method::unicircle:
      return unicircle_poc(ego, opp, mu, sigma, options.quad);
    case Method::multicircle:
      return multicircle_poc(ego, opp, mu, sigma, options.quad);
    case Method::montecarlo:
      return monte_carlo_poc(ego, opp, mu, sigma, options.mc);
  }
  throw std::invalid_argument("unknown method");
}

std::vector<SweepRow> run_sweep(const Scenario& scenario, const std::vector<Method>& methods,
                                const SweepOptions& options) {
  using Clock = std::chrono::steady_clock;
  const std::vector<double> values = scenario.sweep_values();

  std::vector<SweepRow> rows;
  rows.reserve(values.size() * methods.size());
  for (std::size_t index = 0; index < values.size(); ++index) {
    const RelativePose mu = scenario.pose_fn(values[index]);
    SweepOptions row_options = options;
    row_options.mc.seed = options.mc.seed ^ static_cast<std::uint64_t>(index);

    for (Method method : methods) {
      const auto start = Clock::now();
      const POCResult result =
          evaluate(method, scenario.ego, scenario.opp, mu, scenario.sigma, row_options);
      const auto stop = Clock::now();

      SweepRow row;
      row.scenario = scenario.id;
      row.sweep_value = values[index];
      row.method = method;
      row.probability = result.probability;
      row.e_approx_bound = result.e_approx_bound;
      if (options.record_timing) {
        row.eval_time_us = std::chrono::duration<double, std::micro>(stop - start).count();
      }
      rows.push_back(row);
    }
  }
  return rows;
}

namespace {

std::string format_g9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double parse_double(const std::string& field) {
  std::size_t used = 0;
  const double v = std::stod(field, &used);
  if (used != field.size()) {
    throw std::invalid_argument("trailing characters in number '" + field + "'");
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << to_string(r.scenario) << ',' << format_g9(r.sweep_value) << ','
        << to_string(r.method) << ',' << format_g9(r.probability) << ','
        << format_g9(r.e_approx_bound) << ',' << format_g9(r.eval_time_us) << '\n';
  }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  write_csv(file, rows);
  file.flush();
  if (!file) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

std::vector<SweepRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("missing or unexpected CSV header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      fields.push_back(field);
    }
    if (fields.size() != 6) {
      throw std::invalid_argument("expected 6 CSV fields in line '" + line + "'");
    }
    SweepRow r;
    try {
      r.scenario = parse_scenario(fields[0]);
      r.sweep_value = parse_double(fields[1]);
      r.method = parse_method(fields[2]);
      r.probability = parse_double(fields[3]);
      r.e_approx_bound = parse_double(fields[4]);
      r.eval_time_us = parse_double(fields[5]);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("number out of range in line '" + line + "'");
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace mocca::harness
