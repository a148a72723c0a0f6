#include "smode/corrections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "smode/errors.hpp"
#include "smode/specfun.hpp"

namespace smode::corrections {
namespace {

constexpr double kPi = std::numbers::pi;

double prefactor_width(const ElectronKinematics& e) {
  return kPi * kPi * e.v_perp * e.v_perp / 4.0;
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be finite and positive");
  }
}

}  // namespace

double charge_squared() { return 4.0 * kPi * kFineStructure; }

ElectronKinematics ElectronKinematics::from_components(double v_perp, double v_z) {
  if (!(v_perp >= 0.0) || !std::isfinite(v_perp) || !std::isfinite(v_z)) {
    throw DomainError("v_perp must be finite and non-negative, v_z finite");
  }
  const double v = std::hypot(v_perp, v_z);
  if (!(v < 1.0)) {
    throw DomainError("electron speed must be below 1 (units of c)");
  }
  return {v_perp, v_z, v};
}

ElectronKinematics ElectronKinematics::from_gamma(double gamma, double sigma1_cap) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw DomainError("gamma must be finite and > 1");
  }
  const double v = std::sqrt(1.0 - 1.0 / (gamma * gamma));
  const double v_perp = std::min({1.0 / gamma, sigma1_cap, v});
  const double v_z = std::sqrt(std::max(0.0, v * v - v_perp * v_perp));
  return from_components(v_perp, v_z);
}

const char* to_string(WidthRule rule) {
  switch (rule) {
    case WidthRule::lambda_scaling:
      return "lambda_scaling";
    case WidthRule::piecewise:
      return "piecewise";
  }
  return "unknown";
}

WidthRule width_rule_from_string(const std::string& name) {
  if (name == "lambda_scaling") {
    return WidthRule::lambda_scaling;
  }
  if (name == "piecewise") {
    return WidthRule::piecewise;
  }
  throw ConfigError("width_rule must be 'lambda_scaling' or 'piecewise', got '" + name + "'");
}

double lambda_param(const pulse::SpreadParams& s) {
  return s.sigma2 / (s.delta * s.sigma1 * s.sigma1);
}

double frequency_shift_rel(const ElectronKinematics& e, double lambda) {
  require_lambda(lambda);
  return kPi * e.v_perp * e.v_perp / 4.0 * (lambda * std::atan(4.0 * lambda) - 0.25);
}

double width_rel(const ElectronKinematics& e, double lambda) {
  require_lambda(lambda);
  return prefactor_width(e) * (lambda > 1.0 ? lambda : 1.0 / lambda);
}

double width_rel_lambda_branch(const ElectronKinematics& e, double lambda) {
  require_lambda(lambda);
  return prefactor_width(e) * lambda;
}

double width_rel_inverse_branch(const ElectronKinematics& e, double lambda) {
  require_lambda(lambda);
  return prefactor_width(e) / lambda;
}

double width_rel(const ElectronKinematics& e, double lambda, WidthRule rule) {
  return rule == WidthRule::piecewise ? width_rel(e, lambda)
                                       : width_rel_lambda_branch(e, lambda);
}

double fluctuation_energy(const pulse::SpreadParams& s, const ElectronKinematics& e) {
  if (!(e.v > 0.0)) {
    throw DomainError("fluctuation energy diverges for v = 0");
  }
  const double v2 = e.v * e.v;
  const double transverse2 = v2 - e.v_z * e.v_z;
  const double bracket = s.sigma2 * s.sigma2 * transverse2 * transverse2 +
                         16.0 * s.sigma1 * s.sigma1 * e.v_perp * e.v_perp * e.v_z * e.v_z;
  const double two_pi3 = std::pow(2.0 * kPi, 3);
  return charge_squared() * std::pow(s.delta, 5) * s.sigma1 * s.sigma1 * s.sigma2 * s.omega0 *
         bracket / (96.0 * two_pi3 * v2);
}

std::complex<double> resonant_closed_form(const pulse::SpreadParams& s,
                                          const ElectronKinematics& e) {
  const double two_pi3 = std::pow(2.0 * kPi, 3);
  const double w4 = std::pow(s.omega0, 4);
  const double v2 = e.v_perp * e.v_perp;
  const double s1sq = s.sigma1 * s.sigma1;
  const double real = kPi * v2 * w4 * s.delta * s.delta / two_pi3 *
                      (s.delta * s1sq * s.sigma2 / 8.0 -
                       s.sigma2 * s.sigma2 / 2.0 * std::atan(4.0 * s.sigma2 / (s.delta * s1sq)));
  const double shell = std::sqrt(s.sigma2 / s.delta) < s.sigma1
                           ? s.delta * s.delta * s.sigma2 * s.sigma2
                           : std::pow(s.delta, 4) * s1sq * s1sq;
  const double imag = kPi * kPi * v2 * w4 / (4.0 * two_pi3) * shell;
  return {real, imag};
}

double mu_param(const units::PulseParams& p, const pulse::SpreadParams& s,
                const ElectronKinematics& e) {
  if (!(p.pulse_energy_nat > 0.0)) {
    throw DomainError("mu_param: pulse energy must be positive");
  }
  const double full = specfun::phi(s.delta);
  return fluctuation_energy(s, e) / (p.pulse_energy_nat * full * full * full);
}

SecondOrderEnergy second_order_energy(const units::PulseParams& p,
                                      const pulse::SpreadParams& s,
                                      const ElectronKinematics& e, double n0,
                                      WidthRule rule) {
  if (!(n0 >= 0.0)) {
    throw DomainError("occupation n0 must be non-negative");
  }
  const double lambda = lambda_param(s);
  const double scale = n0 * p.omega0;
  SecondOrderEnergy out;
  out.resonant_real = scale * frequency_shift_rel(e, lambda);
  // Im part = Gamma/2, and Gamma/omega0 carries the extra factor pi of the width.
  out.resonant_imag = scale * width_rel(e, lambda, rule) / 2.0;
  out.fluctuation = fluctuation_energy(s, e);
  return out;
}

ValidityReport build_report(const units::PulseParams& p, const pulse::SpreadParams& s,
                            const ElectronKinematics& e, const Thresholds& thresholds) {
  ValidityReport r;
  r.sigma1 = s.sigma1;
  r.sigma2 = s.sigma2;
  r.delta = s.delta;
  r.omega0 = p.omega0;
  r.thresholds = thresholds;
  r.width_rule = thresholds.width_rule;

  r.lambda = lambda_param(s);
  r.freq_shift_rel = frequency_shift_rel(e, r.lambda);
  r.freq_shift_rel_abs = std::abs(r.freq_shift_rel);
  r.width_rel_piecewise = width_rel(e, r.lambda);
  r.width_rel_lambda_branch = width_rel_lambda_branch(e, r.lambda);
  r.width_rel_inverse_branch = width_rel_inverse_branch(e, r.lambda);
  r.width_active_branch = r.lambda > 1.0 ? "lambda" : "1/lambda";
  r.width_rel = width_rel(e, r.lambda, thresholds.width_rule);

  const auto fractions = pulse::energy_fractions(s.delta);
  r.collective_fraction = fractions.collective_fraction;
  r.external_ratio = fractions.external_ratio;
  r.fluctuation_energy = fluctuation_energy(s, e);
  r.mu = r.fluctuation_energy / (p.pulse_energy_nat * r.collective_fraction);
  r.resonant_shift_abs = r.freq_shift_rel * p.omega0;
  r.short_pulse_regime = r.lambda > 1.0;

  r.verdict.shift_ok = r.freq_shift_rel_abs < thresholds.shift;
  r.verdict.width_ok = r.width_rel < thresholds.width;
  r.verdict.mu_ok = r.mu < thresholds.mu;

  {
    std::ostringstream note;
    note.precision(4);
    note << "width: the piecewise branch rule selects '" << r.width_active_branch
         << "' for lambda = " << r.lambda << " (" << r.width_rel_piecewise
         << "), while the quoted width of ~0.01 corresponds to the lambda branch ("
         << r.width_rel_lambda_branch << "); width_rel uses rule '"
         << to_string(thresholds.width_rule) << "'";
    r.notes.push_back(note.str());
  }
  if (r.short_pulse_regime) {
    r.notes.push_back(
        "short-pulse regime: lambda > 1, the frequency spread exceeds delta*sigma1^2 and the "
        "collective mode has little time to form");
  }
  if (r.freq_shift_rel < 0.0) {
    r.notes.push_back("frequency shift is negative; magnitude used for the verdict");
  }
  return r;
}

}  // namespace smode::corrections
