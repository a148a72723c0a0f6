#include "smode/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "smode/errors.hpp"

namespace smode::cli {
namespace {

using nlohmann::json;

double number_field(const json& j, const std::string& key) {
  if (!j.is_number()) {
    throw ConfigError("config key '" + key + "' must be a number");
  }
  return j.get<double>();
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) {
      throw ConfigError(what + ": trailing characters in '" + text + "'");
    }
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError(what + ": not a number: '" + text + "'");
  }
}

SweepAxis axis_from_json(const json& j) {
  if (!j.is_object()) {
    throw ConfigError("sweep entries must be objects");
  }
  SweepAxis axis;
  for (const auto& [key, value] : j.items()) {
    if (key == "name") {
      if (!value.is_string()) {
        throw ConfigError("sweep.name must be a string");
      }
      axis.name = value.get<std::string>();
    } else if (key == "min") {
      axis.min = number_field(value, "sweep.min");
    } else if (key == "max") {
      axis.max = number_field(value, "sweep.max");
    } else if (key == "steps") {
      if (!value.is_number_integer()) {
        throw ConfigError("sweep.steps must be an integer");
      }
      axis.steps = value.get<int>();
    } else if (key == "scale") {
      const auto scale = value.is_string() ? value.get<std::string>() : "";
      if (scale != "log" && scale != "linear") {
        throw ConfigError("sweep.scale must be 'linear' or 'log'");
      }
      axis.log = scale == "log";
    } else {
      throw ConfigError("unknown sweep key '" + key + "'");
    }
  }
  return axis;
}

void check_axis(const SweepAxis& axis) {
  const auto& names = parameter_names();
  if (std::find(names.begin(), names.end(), axis.name) == names.end()) {
    throw ConfigError("sweep axis references unknown parameter '" + axis.name + "'");
  }
  if (axis.steps < 1) {
    throw ConfigError("sweep axis '" + axis.name + "' needs steps >= 1");
  }
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
    throw ConfigError("sweep axis '" + axis.name + "' has a non-finite bound");
  }
  if (axis.log && !(axis.min > 0.0 && axis.max > 0.0)) {
    throw ConfigError("log sweep axis '" + axis.name + "' needs positive bounds");
  }
}

}  // namespace

double SweepAxis::value(int i) const {
  if (steps <= 1) {
    return min;
  }
  const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
  if (i == steps - 1) {
    return max;
  }
  return log ? min * std::pow(max / min, t) : min + (max - min) * t;
}

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names{"intensity", "wavelength", "duration", "spot",
                                              "v_perp",    "v_z",        "gamma"};
  return names;
}

void set_parameter(AnalysisConfig& config, const std::string& name, double value) {
  if (name == "intensity") {
    config.intensity = value;
  } else if (name == "wavelength") {
    config.wavelength = value;
  } else if (name == "duration") {
    config.duration = value;
  } else if (name == "spot") {
    config.spot = value;
  } else if (name == "v_perp") {
    config.v_perp = value;
  } else if (name == "v_z") {
    config.v_z = value;
  } else if (name == "gamma") {
    config.gamma = value;
  } else {
    throw ConfigError("unknown parameter '" + name + "'");
  }
}

AnalysisConfig parse_config_json(const std::string& text, AnalysisConfig base) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  for (const auto& [key, value] : root.items()) {
    const auto& names = parameter_names();
    if (std::find(names.begin(), names.end(), key) != names.end()) {
      set_parameter(base, key, number_field(value, key));
    } else if (key == "format") {
      const auto f = value.is_string() ? value.get<std::string>() : "";
      if (f != "text" && f != "json") {
        throw ConfigError("config key 'format' must be 'text' or 'json'");
      }
      base.format = f == "json" ? OutputFormat::json : OutputFormat::text;
    } else if (key == "threads") {
      if (!value.is_number_integer() || value.get<int>() < 1) {
        throw ConfigError("config key 'threads' must be a positive integer");
      }
      base.threads = value.get<int>();
    } else if (key == "thresholds") {
      if (!value.is_object()) {
        throw ConfigError("config key 'thresholds' must be an object");
      }
      for (const auto& [tkey, tvalue] : value.items()) {
        if (tkey == "shift") {
          base.thresholds.shift = number_field(tvalue, "thresholds.shift");
        } else if (tkey == "width") {
          base.thresholds.width = number_field(tvalue, "thresholds.width");
        } else if (tkey == "mu") {
          base.thresholds.mu = number_field(tvalue, "thresholds.mu");
        } else if (tkey == "width_rule") {
          if (!tvalue.is_string()) {
            throw ConfigError("thresholds.width_rule must be a string");
          }
          base.thresholds.width_rule =
              corrections::width_rule_from_string(tvalue.get<std::string>());
        } else {
          throw ConfigError("unknown thresholds key '" + tkey + "'");
        }
      }
    } else if (key == "sweep") {
      if (!value.is_array()) {
        throw ConfigError("config key 'sweep' must be an array");
      }
      base.axes.clear();
      for (const auto& entry : value) {
        base.axes.push_back(axis_from_json(entry));
      }
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return base;
}

AnalysisConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_json(text.str());
}

SweepAxis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) {
    parts.push_back(part);
  }
  if (parts.size() != 4 && parts.size() != 5) {
    throw ConfigError("sweep axis must be name:min:max:steps[:log|:linear], got '" + spec + "'");
  }
  SweepAxis axis;
  axis.name = parts[0];
  axis.min = parse_number(parts[1], "sweep axis min");
  axis.max = parse_number(parts[2], "sweep axis max");
  const double steps = parse_number(parts[3], "sweep axis steps");
  if (steps != std::floor(steps) || steps < 1 || steps > 1e6) {
    throw ConfigError("sweep axis steps must be a positive integer");
  }
  axis.steps = static_cast<int>(steps);
  if (parts.size() == 5) {
    if (parts[4] != "log" && parts[4] != "linear") {
      throw ConfigError("sweep axis scale must be 'log' or 'linear'");
    }
    axis.log = parts[4] == "log";
  }
  check_axis(axis);
  return axis;
}

void validate(const AnalysisConfig& config) {
  const bool components = config.v_perp.has_value() || config.v_z.has_value();
  if (components && config.gamma.has_value()) {
    throw ConfigError("give either gamma or v_perp/v_z, not both");
  }
  if (config.v_perp.has_value() != config.v_z.has_value()) {
    throw ConfigError("v_perp and v_z must be given together");
  }
  if (config.axes.size() > 2) {
    throw ConfigError("at most two sweep axes are supported");
  }
  for (const auto& axis : config.axes) {
    check_axis(axis);
  }
  if (config.threads < 1) {
    throw ConfigError("threads must be positive");
  }
  const auto& t = config.thresholds;
  if (!(t.shift > 0.0) || !(t.width > 0.0) || !(t.mu > 0.0)) {
    throw ConfigError("thresholds must be positive");
  }
}

}  // namespace smode::cli
