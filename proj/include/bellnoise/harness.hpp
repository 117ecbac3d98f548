#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bellnoise/scenario.hpp"

namespace bellnoise {

struct TraceRow {
  double t = 0.0;
  std::string method;
  std::string state;
  double concurrence = 0.0;
  std::optional<double> stderr_value;  // empty for deterministic methods
};

using ConcurrenceTrace = std::vector<TraceRow>;

/// Flat dotted-key config text ("noise.kind = ou", '#' comments).
Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

/// Bundled scenarios reproducing the figure datasets, named fig1..fig6.
std::vector<std::string> preset_names();
std::string preset_description(const std::string& name);
std::string preset_config(const std::string& name);  // throws on unknown name
bool is_preset(const std::string& name);

/// Dispatches every requested method; Monte Carlo may use n_threads.
ConcurrenceTrace run_scenario(const Scenario& scenario, int n_threads = 1);

/// CSV with header t,method,state,concurrence,stderr at 17 significant
/// digits; byte-identical for identical scenario + seed.
void write_trace_csv(const ConcurrenceTrace& trace, const std::string& path);
std::string trace_to_csv(const ConcurrenceTrace& trace);
ConcurrenceTrace read_trace_csv(const std::string& path);

struct GridMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComparePair {
  std::string state;
  std::string label_a, label_b;  // "file:method"
  double max_abs_deviation = 0.0;
  double fraction_within_3se = 0.0;
  double sudden_death_a = 0.0, sudden_death_b = 0.0;  // +inf when no crossing
};

struct CompareReport {
  std::vector<ComparePair> pairs;
  bool tolerance_violated = false;
  std::string text;  // rendered report
};

/// Cross-compares all traces sharing a state; traces must share the
/// time grid (GridMismatchError otherwise). With a tolerance, flags any
/// pair whose max deviation exceeds it.
CompareReport compare_traces(const std::vector<std::string>& csv_paths,
                             std::optional<double> tolerance);

}  // namespace bellnoise
