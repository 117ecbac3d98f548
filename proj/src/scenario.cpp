#include "bellnoise/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace bellnoise {

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::Dephasing: return "dephasing";
    case Geometry::Isotropic: return "isotropic";
    case Geometry::Transverse: return "transverse";
  }
  return "?";
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Analytic: return "analytic";
    case Method::Qsba: return "qsba";
    case Method::Cumulant2: return "cumulant2";
    case Method::MonteCarlo: return "montecarlo";
  }
  return "?";
}

AxisFlags axes_for(Geometry g) {
  switch (g) {
    case Geometry::Dephasing: return {false, false, true};
    case Geometry::Isotropic: return {true, true, true};
    case Geometry::Transverse: return {true, true, false};
  }
  return {};
}

bool Scenario::has_method(Method m) const {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

std::vector<double> Scenario::time_grid() const {
  std::vector<double> t(n_points);
  const double step = t_max / double(n_points - 1);
  for (int k = 0; k < n_points; ++k) t[k] = step * k;
  return t;
}

NoiseSpec Scenario::effective_noise() const {
  NoiseSpec spec = noise;
  spec.axes = axes_for(geometry);
  spec.gamma = gamma;
  return spec;
}

double Scenario::mc_dt() const {
  if (dt_override) return *dt_override;
  const double two_pi = 2.0 * kPi;
  if (noise.kind == NoiseKind::Ou) {
    const double scale = std::max({omega, noise.sigma1, noise.sigma2});
    double dt = noise.tc / 50.0;
    if (scale > 0.0) dt = std::min(dt, two_pi / (40.0 * scale));
    return dt;
  }
  double t_min = noise.white_T(2);
  for (int axis = 0; axis < 3; ++axis)
    if (noise.axes.enabled(axis)) t_min = std::min(t_min, noise.white_T(axis));
  double dt = t_min / 200.0;
  if (omega > 0.0) dt = std::min(dt, two_pi / (40.0 * omega));
  return dt;
}

void Scenario::validate() const {
  if (states.empty()) throw ConfigError("state", "at least one Bell state is required");
  if (gamma < 0.0 || gamma > 1.0) throw ConfigError("gamma", "must lie in [0, 1]");
  if (t_max <= 0.0) throw ConfigError("t_max", "must be positive");
  if (n_points < 2) throw ConfigError("n_points", "must be at least 2");
  if (methods.empty()) throw ConfigError("methods", "at least one method is required");
  if (dt_override && *dt_override <= 0.0) throw ConfigError("dt", "must be positive");

  try {
    effective_noise().validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError("noise", err.what());
  }

  if (has_method(Method::MonteCarlo)) {
    if (trajectories < 2000)
      throw ConfigError("trajectories", "montecarlo requires at least 2000 trajectories");
  }

  const bool white = noise.kind == NoiseKind::White;
  if (has_method(Method::Analytic) && geometry != Geometry::Dephasing && !white)
    throw MethodGeometryError(
        "method 'analytic' with geometry '" + geometry_name(geometry) +
        "' requires white noise (closed forms); use cumulant2/montecarlo for OU");
  if (has_method(Method::Qsba)) {
    if (geometry != Geometry::Transverse)
      throw MethodGeometryError("method 'qsba' requires transverse geometry");
    if (white) throw MethodGeometryError("method 'qsba' requires OU noise");
    if (gamma != 0.0 && gamma != 1.0)
      throw MethodGeometryError(
          "method 'qsba' covers only independent (gamma = 0) or fully correlated "
          "(gamma = 1) noise");
  }
}

}  // namespace bellnoise
