#include "bellnoise/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "bellnoise/analytic.hpp"
#include "bellnoise/propagator.hpp"

namespace bellnoise {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  return parts;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "'" + value + "' is not a number");
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "'" + value + "' is not an integer");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::uint64_t x = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "'" + value + "' is not an unsigned integer");
  }
}

Bell parse_bell(const std::string& key, const std::string& value) {
  if (value == "psi_minus") return Bell::PsiMinus;
  if (value == "psi_plus") return Bell::PsiPlus;
  if (value == "phi_plus") return Bell::PhiPlus;
  if (value == "phi_minus") return Bell::PhiMinus;
  throw ConfigError(key, "unknown state '" + value +
                             "' (expected psi_minus|psi_plus|phi_plus|phi_minus)");
}

Method parse_method(const std::string& key, const std::string& value) {
  if (value == "analytic") return Method::Analytic;
  if (value == "qsba") return Method::Qsba;
  if (value == "cumulant2") return Method::Cumulant2;
  if (value == "montecarlo") return Method::MonteCarlo;
  throw ConfigError(key, "unknown method '" + value +
                             "' (expected analytic|qsba|cumulant2|montecarlo)");
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    if (!kv.emplace(key, value).second) throw ConfigError(key, "duplicate key");
  }

  static const std::set<std::string> known = {
      "geometry", "state", "omega", "gamma", "t_max", "n_points", "methods",
      "trajectories", "seed", "dt", "noise.kind", "noise.sigma", "noise.sigma1",
      "noise.sigma2", "noise.tc", "noise.T", "noise.T_x", "noise.T_y", "noise.T_z"};
  for (const auto& [key, value] : kv)
    if (!known.count(key)) throw ConfigError(key, "unknown key");

  const auto require = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError(key, "missing required key");
    return it->second;
  };
  const auto optional = [&](const std::string& key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  Scenario sc;
  {
    const std::string& g = require("geometry");
    if (g == "dephasing") sc.geometry = Geometry::Dephasing;
    else if (g == "isotropic") sc.geometry = Geometry::Isotropic;
    else if (g == "transverse") sc.geometry = Geometry::Transverse;
    else throw ConfigError("geometry", "unknown geometry '" + g +
                                           "' (expected dephasing|isotropic|transverse)");
  }
  for (const auto& name : split(require("state"), ','))
    sc.states.push_back(parse_bell("state", name));
  sc.omega = parse_double("omega", require("omega"));
  sc.gamma = parse_double("gamma", require("gamma"));
  sc.t_max = parse_double("t_max", require("t_max"));
  sc.n_points = int(parse_int("n_points", require("n_points")));
  for (const auto& name : split(require("methods"), ','))
    sc.methods.push_back(parse_method("methods", name));

  {
    const std::string& kind = require("noise.kind");
    if (kind == "white") sc.noise.kind = NoiseKind::White;
    else if (kind == "ou") sc.noise.kind = NoiseKind::Ou;
    else throw ConfigError("noise.kind", "unknown kind '" + kind + "' (expected white|ou)");
  }
  const bool ou = sc.noise.kind == NoiseKind::Ou;
  static const std::set<std::string> ou_keys = {"noise.sigma", "noise.sigma1",
                                                "noise.sigma2", "noise.tc"};
  static const std::set<std::string> white_keys = {"noise.T", "noise.T_x", "noise.T_y",
                                                   "noise.T_z"};
  for (const auto& [key, value] : kv) {
    if (ou && white_keys.count(key))
      throw ConfigError(key, "only applies to white noise");
    if (!ou && ou_keys.count(key))
      throw ConfigError(key, "only applies to OU noise");
  }
  if (ou) {
    if (const auto* s = optional("noise.sigma"))
      sc.noise.sigma1 = sc.noise.sigma2 = parse_double("noise.sigma", *s);
    else if (!optional("noise.sigma1") || !optional("noise.sigma2"))
      throw ConfigError("noise.sigma", "missing required key");
    if (const auto* s = optional("noise.sigma1"))
      sc.noise.sigma1 = parse_double("noise.sigma1", *s);
    if (const auto* s = optional("noise.sigma2"))
      sc.noise.sigma2 = parse_double("noise.sigma2", *s);
    sc.noise.tc = parse_double("noise.tc", require("noise.tc"));
  } else {
    sc.noise.T = parse_double("noise.T", require("noise.T"));
    if (const auto* s = optional("noise.T_x")) sc.noise.T_axis[0] = parse_double("noise.T_x", *s);
    if (const auto* s = optional("noise.T_y")) sc.noise.T_axis[1] = parse_double("noise.T_y", *s);
    if (const auto* s = optional("noise.T_z")) sc.noise.T_axis[2] = parse_double("noise.T_z", *s);
  }
  sc.noise.axes = axes_for(sc.geometry);
  sc.noise.gamma = sc.gamma;

  if (const auto* s = optional("trajectories"))
    sc.trajectories = int(parse_int("trajectories", *s));
  if (const auto* s = optional("seed")) sc.seed = parse_u64("seed", *s);
  else if (sc.has_method(Method::MonteCarlo))
    throw ConfigError("seed", "required when montecarlo is requested");
  if (const auto* s = optional("dt")) sc.dt_override = parse_double("dt", *s);

  sc.validate();
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

namespace {

struct Preset {
  const char* name;
  const char* description;
  const char* config;
};

const Preset kPresets[] = {
    {"fig1", "isotropic white noise, gamma = 0.8, all Bell states, closed forms",
     "geometry = isotropic\n"
     "state = psi_minus,psi_plus,phi_plus,phi_minus\n"
     "omega = 1.0\n"
     "gamma = 0.8\n"
     "noise.kind = white\n"
     "noise.T = 1.0\n"
     "t_max = 1.5\n"
     "n_points = 301\n"
     "methods = analytic\n"
     "seed = 1\n"},
    {"fig2", "transverse white noise, gamma = 0.8, all Bell states, closed forms",
     "geometry = transverse\n"
     "state = psi_minus,psi_plus,phi_plus,phi_minus\n"
     "omega = 1.0\n"
     "gamma = 0.8\n"
     "noise.kind = white\n"
     "noise.T = 1.0\n"
     "t_max = 1.5\n"
     "n_points = 301\n"
     "methods = analytic\n"
     "seed = 1\n"},
    {"fig3", "independent isotropic OU noise (sigma = 5, tc = 10, omega = 1), "
             "trajectory average vs second-order cumulant",
     "geometry = isotropic\n"
     "state = psi_plus\n"
     "omega = 1.0\n"
     "gamma = 0.0\n"
     "noise.kind = ou\n"
     "noise.sigma = 5.0\n"
     "noise.tc = 10.0\n"
     "t_max = 0.6\n"
     "n_points = 61\n"
     "methods = montecarlo,cumulant2\n"
     "trajectories = 10000\n"
     "seed = 20240\n"},
    {"fig4", "independent transverse OU noise (sigma = 4, tc = 10, omega = 40), "
             "trajectory average vs cumulant vs quasi-static forms",
     "geometry = transverse\n"
     "state = psi_plus\n"
     "omega = 40.0\n"
     "gamma = 0.0\n"
     "noise.kind = ou\n"
     "noise.sigma = 4.0\n"
     "noise.tc = 10.0\n"
     "t_max = 5.0\n"
     "n_points = 101\n"
     "methods = montecarlo,cumulant2,qsba\n"
     "trajectories = 10000\n"
     "seed = 20241\n"},
    {"fig5", "fully correlated transverse OU noise (sigma = 4, tc = 10, omega = 40), "
             "phi_plus decay",
     "geometry = transverse\n"
     "state = phi_plus\n"
     "omega = 40.0\n"
     "gamma = 1.0\n"
     "noise.kind = ou\n"
     "noise.sigma = 4.0\n"
     "noise.tc = 10.0\n"
     "t_max = 5.0\n"
     "n_points = 101\n"
     "methods = montecarlo,cumulant2,qsba\n"
     "trajectories = 10000\n"
     "seed = 20242\n"},
    {"fig6", "fully correlated transverse OU noise (sigma = 4, tc = 10, omega = 40), "
             "psi_plus ripple",
     "geometry = transverse\n"
     "state = psi_plus\n"
     "omega = 40.0\n"
     "gamma = 1.0\n"
     "noise.kind = ou\n"
     "noise.sigma = 4.0\n"
     "noise.tc = 10.0\n"
     "t_max = 5.0\n"
     "n_points = 101\n"
     "methods = montecarlo,cumulant2,qsba\n"
     "trajectories = 10000\n"
     "seed = 20243\n"},
};

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

bool is_preset(const std::string& name) {
  for (const auto& p : kPresets)
    if (name == p.name) return true;
  return false;
}

std::string preset_description(const std::string& name) {
  for (const auto& p : kPresets)
    if (name == p.name) return p.description;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::string preset_config(const std::string& name) {
  for (const auto& p : kPresets)
    if (name == p.name) return p.config;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

namespace {

double analytic_concurrence(const Scenario& sc, Bell state, double t) {
  const NoiseSpec noise = sc.effective_noise();
  switch (sc.geometry) {
    case Geometry::Dephasing: {
      const double g1 = dephasing_decay(noise, t, 1);
      const double g2 = dephasing_decay(noise, t, 2);
      return dephasing_concurrence(state, 0.5 * (g1 + g2), dephasing_decay_cross(noise, t));
    }
    case Geometry::Isotropic:
      return isotropic_white_concurrence(state, sc.gamma, noise.white_T(0), t);
    case Geometry::Transverse:
      return transverse_white_concurrence(state, sc.gamma, noise.white_T(0), t);
  }
  throw std::logic_error("analytic_concurrence: bad geometry");
}

}  // namespace

ConcurrenceTrace run_scenario(const Scenario& sc, int n_threads) {
  sc.validate();
  ConcurrenceTrace trace;
  const std::vector<double> grid = sc.time_grid();

  const auto emit = [&](Method m, Bell state, double t, double c,
                        std::optional<double> se) {
    trace.push_back({t, method_name(m), bell_name(state), c, se});
  };

  // Canonical method order keeps the CSV layout independent of the
  // order methods were listed in the config.
  for (const Method m : {Method::Analytic, Method::Qsba, Method::Cumulant2,
                         Method::MonteCarlo}) {
    if (!sc.has_method(m)) continue;
    switch (m) {
      case Method::Analytic:
        for (const Bell state : sc.states)
          for (const double t : grid) emit(m, state, t, analytic_concurrence(sc, state, t), {});
        break;
      case Method::Qsba: {
        bool warned = false;
        for (const Bell state : sc.states)
          for (const double t : grid) {
            const QsbaValue q = qsba_concurrence(state, sc.gamma == 1.0, sc.noise.sigma1,
                                                 sc.noise.sigma2, sc.omega, t);
            if (!q.within_validity && !warned) {
              std::cerr << "warning: qsba outside its validity domain (sigma/omega > 0.3)\n";
              warned = true;
            }
            emit(m, state, t, q.value, {});
          }
        break;
      }
      case Method::Cumulant2: {
        // One matrix exponential per grid point, shared across states.
        std::vector<std::vector<double>> c(sc.states.size());
        for (const double t : grid) {
          const SuperOperator u = cumulant2_propagator(sc, t);
          for (std::size_t s = 0; s < sc.states.size(); ++s)
            c[s].push_back(cumulant2_concurrence(u, sc.states[s]));
        }
        for (std::size_t s = 0; s < sc.states.size(); ++s)
          for (int k = 0; k < sc.n_points; ++k) emit(m, sc.states[s], grid[k], c[s][k], {});
        break;
      }
      case Method::MonteCarlo: {
        const std::vector<EnsembleResult> results = ensemble_average(sc, n_threads);
        for (const EnsembleResult& res : results)
          for (int k = 0; k < int(res.times.size()); ++k)
            emit(m, res.state, res.times[k], res.concurrence[k], res.concurrence_stderr[k]);
        break;
      }
    }
  }
  return trace;
}

std::string trace_to_csv(const ConcurrenceTrace& trace) {
  std::string out = "t,method,state,concurrence,stderr\n";
  for (const TraceRow& row : trace) {
    out += format_number(row.t);
    out += ',';
    out += row.method;
    out += ',';
    out += row.state;
    out += ',';
    out += format_number(row.concurrence);
    out += ',';
    if (row.stderr_value) out += format_number(*row.stderr_value);
    out += '\n';
  }
  return out;
}

void write_trace_csv(const ConcurrenceTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << trace_to_csv(trace);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

ConcurrenceTrace read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || trim(line) != "t,method,state,concurrence,stderr")
    throw std::runtime_error("'" + path + "': missing trace header");
  ConcurrenceTrace trace;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (f.size() == 4) f.push_back("");  // trailing blank stderr
    if (f.size() != 5) throw std::runtime_error("'" + path + "': malformed row '" + line + "'");
    TraceRow row;
    row.t = parse_double("t", f[0]);
    row.method = f[1];
    row.state = f[2];
    row.concurrence = parse_double("concurrence", f[3]);
    if (!trim(f[4]).empty()) row.stderr_value = parse_double("stderr", f[4]);
    trace.push_back(row);
  }
  return trace;
}

namespace {

struct TraceGroup {
  std::string label;  // file:method
  std::vector<double> t, c;
  std::vector<std::optional<double>> se;
};

std::string basename_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

double first_zero_crossing(const TraceGroup& g) {
  for (std::size_t k = 0; k < g.t.size(); ++k)
    if (g.c[k] <= 0.0) return g.t[k];
  return std::numeric_limits<double>::infinity();
}

std::string short_num(double x) {
  if (std::isinf(x)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

CompareReport compare_traces(const std::vector<std::string>& csv_paths,
                             std::optional<double> tolerance) {
  // state -> traces from all files
  std::map<std::string, std::vector<TraceGroup>> by_state;
  for (const auto& path : csv_paths) {
    const ConcurrenceTrace trace = read_trace_csv(path);
    std::map<std::pair<std::string, std::string>, TraceGroup> groups;
    for (const TraceRow& row : trace) {
      TraceGroup& g = groups[{row.state, row.method}];
      g.label = basename_of(path) + ":" + row.method;
      g.t.push_back(row.t);
      g.c.push_back(row.concurrence);
      g.se.push_back(row.stderr_value);
    }
    for (auto& [key, group] : groups) by_state[key.first].push_back(std::move(group));
  }

  CompareReport report;
  std::ostringstream text;
  for (const auto& [state, groups] : by_state) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        const TraceGroup& a = groups[i];
        const TraceGroup& b = groups[j];
        if (a.t.size() != b.t.size())
          throw GridMismatchError("state '" + state + "': " + a.label + " and " + b.label +
                                  " have different grid sizes");
        for (std::size_t k = 0; k < a.t.size(); ++k)
          if (a.t[k] != b.t[k])
            throw GridMismatchError("state '" + state + "': " + a.label + " and " + b.label +
                                    " disagree on the time grid");
        ComparePair pair;
        pair.state = state;
        pair.label_a = a.label;
        pair.label_b = b.label;
        int within = 0;
        for (std::size_t k = 0; k < a.t.size(); ++k) {
          const double dev = std::abs(a.c[k] - b.c[k]);
          pair.max_abs_deviation = std::max(pair.max_abs_deviation, dev);
          const double se_a = a.se[k].value_or(0.0);
          const double se_b = b.se[k].value_or(0.0);
          if (dev <= 3.0 * std::sqrt(se_a * se_a + se_b * se_b)) ++within;
        }
        pair.fraction_within_3se = double(within) / double(a.t.size());
        pair.sudden_death_a = first_zero_crossing(a);
        pair.sudden_death_b = first_zero_crossing(b);
        const bool violated = tolerance && pair.max_abs_deviation > *tolerance;
        if (violated) report.tolerance_violated = true;
        text << "state=" << state << "  " << pair.label_a << " vs " << pair.label_b
             << ": max_dev=" << short_num(pair.max_abs_deviation)
             << "  within_3se=" << short_num(100.0 * pair.fraction_within_3se) << "%"
             << "  t_sd=" << short_num(pair.sudden_death_a) << "/"
             << short_num(pair.sudden_death_b) << (violated ? "  TOLERANCE_VIOLATED" : "")
             << "\n";
        report.pairs.push_back(std::move(pair));
      }
    }
  }
  report.text = text.str();
  return report;
}

}  // namespace bellnoise
