#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smode/corrections.hpp"

namespace smode::cli {

enum class OutputFormat { text, json };

struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 1;
  bool log = false;

  /// Grid value i of steps; steps == 1 gives min.
  double value(int i) const;
};

/// Parameter names accepted by sweep axes and config keys.
const std::vector<std::string>& parameter_names();

struct AnalysisConfig {
  double intensity = 1e22;   // W/cm^2
  double wavelength = 800.0; // nm
  double duration = 30.0;    // fs
  double spot = 1e-8;        // cm^2
  std::optional<double> v_perp;
  std::optional<double> v_z;
  std::optional<double> gamma;
  corrections::Thresholds thresholds;
  OutputFormat format = OutputFormat::text;
  std::vector<SweepAxis> axes;
  int threads = 4;
};

inline constexpr double kDefaultVPerp = 0.127;
inline constexpr double kDefaultVz = 0.99;

/// JSON object with keys intensity, wavelength, duration, spot, v_perp, v_z,
/// gamma, format, threads, thresholds {shift, width, mu, width_rule} and
/// sweep [{name, min, max, steps, scale}]. Unknown keys are rejected.
/// Throws ConfigError naming the offending key.
AnalysisConfig load_config_file(const std::string& path);
AnalysisConfig parse_config_json(const std::string& text, AnalysisConfig base = {});

/// "name:min:max:steps[:log|:linear]".
SweepAxis parse_axis(const std::string& spec);

/// Sets a named parameter (intensity, ..., gamma). Throws ConfigError for
/// unknown names.
void set_parameter(AnalysisConfig& config, const std::string& name, double value);

/// Checks the electron inputs (gamma xor v_perp/v_z) and axes. Pulse fields
/// are checked when converted. Throws ConfigError.
void validate(const AnalysisConfig& config);

}  // namespace smode::cli
