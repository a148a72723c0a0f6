#pragma once

#include <string>

#include "json.hpp"
#include "smode/corrections.hpp"
#include "smode/pulse.hpp"
#include "smode/units.hpp"

namespace smode::cli {

/// Everything one analysis run produces.
struct Analysis {
  units::PulseParams pulse;
  pulse::SpreadParams spreads;
  corrections::ElectronKinematics kinematics;
  corrections::ValidityReport report;
};

/// printf("%.12g").
std::string format_number(double value);

/// value rounded to 12 significant digits; null for non-finite values.
nlohmann::json json_number(double value);

std::string render_text(const Analysis& analysis);
nlohmann::json render_json(const Analysis& analysis);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& field);

}  // namespace smode::cli
