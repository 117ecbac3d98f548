#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellnoise/noise.hpp"
#include "bellnoise/operators.hpp"

namespace bellnoise {

enum class Geometry { Dephasing, Isotropic, Transverse };
enum class Method { Analytic, Qsba, Cumulant2, MonteCarlo };

std::string geometry_name(Geometry g);
std::string method_name(Method m);

/// Config- or validation-level failure; key names the offending entry.
struct ConfigError : std::runtime_error {
  std::string key;
  ConfigError(std::string key_, const std::string& what_)
      : std::runtime_error("config key '" + key_ + "': " + what_), key(std::move(key_)) {}
};

/// A requested method is not applicable to the scenario's geometry/noise.
struct MethodGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scenario {
  Geometry geometry = Geometry::Dephasing;
  std::vector<Bell> states;
  NoiseSpec noise;  // axes derived from geometry, gamma mirrored
  double omega = 0.0;
  double gamma = 0.0;
  double t_max = 1.0;
  int n_points = 2;
  std::vector<Method> methods;
  int trajectories = 0;
  std::uint64_t seed = 0;
  std::optional<double> dt_override;  // Monte Carlo step control

  bool has_method(Method m) const;
  std::vector<double> time_grid() const;

  /// noise with axes derived from the geometry and gamma mirrored in.
  NoiseSpec effective_noise() const;

  /// Default Monte Carlo step: OU min(tc/50, 2pi/(40 max(omega, sigma)));
  /// white noise resolves T/dt >= 200 and the precession period.
  double mc_dt() const;

  void validate() const;  // throws ConfigError / MethodGeometryError
};

AxisFlags axes_for(Geometry g);

}  // namespace bellnoise
