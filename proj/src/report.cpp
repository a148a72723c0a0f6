#include "smode/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace smode::cli {
namespace {

const char* flag(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

nlohmann::json json_number(double value) {
  if (!std::isfinite(value)) {
    return nullptr;
  }
  return std::strtod(format_number(value).c_str(), nullptr);
}

std::string render_text(const Analysis& a) {
  const auto& r = a.report;
  const auto& p = a.pulse;
  std::ostringstream out;
  auto line = [&out](const char* name, double value, const char* unit = "") {
    out << "  " << name;
    for (std::size_t i = std::string(name).size(); i < 26; ++i) {
      out << ' ';
    }
    out << format_number(value) << (unit[0] != '\0' ? " " : "") << unit << '\n';
  };

  out << "pulse\n";
  line("intensity", p.intensity_lab, "W/cm^2");
  line("wavelength", p.wavelength_lab, "nm");
  line("duration", p.duration_lab, "fs");
  line("spot", p.spot_area_lab, "cm^2");
  line("omega0", p.omega0, "cm^-1");
  line("tau", p.tau_nat, "cm");
  line("pulse_energy", p.pulse_energy_nat, "cm^-1");
  out << "electron\n";
  line("v_perp", a.kinematics.v_perp);
  line("v_z", a.kinematics.v_z);
  line("v", a.kinematics.v);
  out << "spreads\n";
  line("sigma1", r.sigma1);
  line("sigma2", r.sigma2);
  line("delta", r.delta);
  line("delta1", a.spreads.delta1, "cm^-1");
  line("delta2", a.spreads.delta2, "cm^-1");
  line("mode_volume", a.spreads.mode_volume, "cm^-3");
  line("collective_fraction", r.collective_fraction);
  line("external_ratio", r.external_ratio);
  out << "validity\n";
  line("lambda", r.lambda);
  line("freq_shift_rel", r.freq_shift_rel);
  line("freq_shift_rel_abs", r.freq_shift_rel_abs);
  line("resonant_shift_abs", r.resonant_shift_abs, "cm^-1");
  line("width_rel", r.width_rel);
  out << "    rule: " << corrections::to_string(r.width_rule) << '\n';
  line("width_rel_lambda_branch", r.width_rel_lambda_branch);
  line("width_rel_inverse_branch", r.width_rel_inverse_branch);
  line("width_rel_piecewise", r.width_rel_piecewise);
  out << "    active branch (piecewise): " << r.width_active_branch << '\n';
  line("mu", r.mu);
  line("fluctuation_energy", r.fluctuation_energy, "cm^-1");
  out << "verdict\n";
  out << "  shift " << flag(r.verdict.shift_ok) << " (< " << format_number(r.thresholds.shift)
      << ")\n";
  out << "  width " << flag(r.verdict.width_ok) << " (< " << format_number(r.thresholds.width)
      << ")\n";
  out << "  mu    " << flag(r.verdict.mu_ok) << " (< " << format_number(r.thresholds.mu)
      << ")\n";
  out << "  single-mode approximation: " << (r.verdict.all() ? "valid" : "not valid") << '\n';
  if (!r.notes.empty()) {
    out << "notes\n";
    for (const auto& note : r.notes) {
      out << "  - " << note << '\n';
    }
  }
  return out.str();
}

nlohmann::json render_json(const Analysis& a) {
  const auto& r = a.report;
  const auto& p = a.pulse;
  nlohmann::json j;
  j["pulse"] = {{"intensity", json_number(p.intensity_lab)},
                {"wavelength", json_number(p.wavelength_lab)},
                {"duration", json_number(p.duration_lab)},
                {"spot", json_number(p.spot_area_lab)},
                {"omega0", json_number(p.omega0)},
                {"tau", json_number(p.tau_nat)},
                {"pulse_energy", json_number(p.pulse_energy_nat)}};
  j["electron"] = {{"v_perp", json_number(a.kinematics.v_perp)},
                   {"v_z", json_number(a.kinematics.v_z)},
                   {"v", json_number(a.kinematics.v)}};
  j["spreads"] = {{"sigma1", json_number(r.sigma1)},
                  {"sigma2", json_number(r.sigma2)},
                  {"delta", json_number(r.delta)},
                  {"delta1", json_number(a.spreads.delta1)},
                  {"delta2", json_number(a.spreads.delta2)},
                  {"mode_volume", json_number(a.spreads.mode_volume)},
                  {"collective_fraction", json_number(r.collective_fraction)},
                  {"external_ratio", json_number(r.external_ratio)}};
  j["validity"] = {{"lambda", json_number(r.lambda)},
                   {"freq_shift_rel", json_number(r.freq_shift_rel)},
                   {"freq_shift_rel_abs", json_number(r.freq_shift_rel_abs)},
                   {"resonant_shift_abs", json_number(r.resonant_shift_abs)},
                   {"width_rel", json_number(r.width_rel)},
                   {"width_rule", corrections::to_string(r.width_rule)},
                   {"width_rel_lambda_branch", json_number(r.width_rel_lambda_branch)},
                   {"width_rel_inverse_branch", json_number(r.width_rel_inverse_branch)},
                   {"width_rel_piecewise", json_number(r.width_rel_piecewise)},
                   {"width_active_branch", r.width_active_branch},
                   {"mu", json_number(r.mu)},
                   {"fluctuation_energy", json_number(r.fluctuation_energy)},
                   {"short_pulse_regime", r.short_pulse_regime}};
  j["thresholds"] = {{"shift", json_number(r.thresholds.shift)},
                     {"width", json_number(r.thresholds.width)},
                     {"mu", json_number(r.thresholds.mu)}};
  j["verdict"] = {{"shift_ok", r.verdict.shift_ok},
                  {"width_ok", r.verdict.width_ok},
                  {"mu_ok", r.verdict.mu_ok},
                  {"valid", r.verdict.all()}};
  j["notes"] = r.notes;
  return j;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace smode::cli
