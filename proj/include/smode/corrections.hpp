#pragma once

#include <complex>
#include <string>
#include <vector>

#include "smode/pulse.hpp"
#include "smode/units.hpp"

// Second-order corrections to the collective-mode energy and the three
// validity parameters of the single-mode approximation.

namespace smode::corrections {

/// Fine-structure constant.
inline constexpr double kFineStructure = 1.0 / 137.035999;
/// Electron charge squared, Heaviside-Lorentz with hbar = c = 1: 4 pi alpha.
double charge_squared();

struct ElectronKinematics {
  double v_perp = 0.0;  // component perpendicular to k0
  double v_z = 0.0;     // component along k0
  double v = 0.0;       // speed

  /// Throws DomainError unless v_perp >= 0 and v < 1.
  static ElectronKinematics from_components(double v_perp, double v_z);
  /// v from gamma; v_perp = min(1/gamma, sigma1_cap) (angular divergence ~ 1/gamma,
  /// capped by the pulse's angular spread); v_z takes the rest.
  static ElectronKinematics from_gamma(double gamma, double sigma1_cap);
};

/// Which formula feeds ValidityReport::width_rel.
enum class WidthRule {
  /// pi^2 v_perp^2 lambda / 4 for every lambda; reproduces the quoted
  /// width of 0.01 and its tenfold growth from 30 fs to 3 fs.
  lambda_scaling,
  /// Piecewise rule: lambda for lambda > 1, 1/lambda below.
  piecewise,
};

const char* to_string(WidthRule rule);
WidthRule width_rule_from_string(const std::string& name);

struct Thresholds {
  double shift = 0.1;
  double width = 0.1;
  double mu = 1e-3;
  WidthRule width_rule = WidthRule::lambda_scaling;
};

struct Verdict {
  bool shift_ok = false;
  bool width_ok = false;
  bool mu_ok = false;
  bool all() const { return shift_ok && width_ok && mu_ok; }
};

struct ValidityReport {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double delta = 0.0;
  double omega0 = 0.0;

  double lambda = 0.0;
  double freq_shift_rel = 0.0;  // signed
  double freq_shift_rel_abs = 0.0;
  double width_rel = 0.0;  // per thresholds.width_rule
  double width_rel_piecewise = 0.0;
  double width_rel_lambda_branch = 0.0;   // pi^2 v^2 lambda / 4
  double width_rel_inverse_branch = 0.0;  // pi^2 v^2 / (4 lambda)
  std::string width_active_branch;        // branch selected by the piecewise rule
  WidthRule width_rule = WidthRule::lambda_scaling;

  double mu = 0.0;
  double collective_fraction = 0.0;
  double external_ratio = 0.0;
  double resonant_shift_abs = 0.0;  // cm^-1
  double fluctuation_energy = 0.0;  // cm^-1

  bool short_pulse_regime = false;  // lambda > 1
  Thresholds thresholds;
  Verdict verdict;
  std::vector<std::string> notes;
};

struct SecondOrderEnergy {
  double resonant_real = 0.0;  // cm^-1
  double resonant_imag = 0.0;  // cm^-1
  double fluctuation = 0.0;    // cm^-1
};

/// lambda = sigma2 / (delta sigma1^2).
double lambda_param(const pulse::SpreadParams& s);

/// Relative shift of the collective-mode frequency,
/// (pi v_perp^2 / 4)(lambda atan(4 lambda) - 1/4). Negative for small lambda.
double frequency_shift_rel(const ElectronKinematics& e, double lambda);

/// Relative width with the piecewise branch rule:
/// (pi^2 v_perp^2 / 4) * (lambda if lambda > 1, else 1/lambda).
double width_rel(const ElectronKinematics& e, double lambda);
double width_rel_lambda_branch(const ElectronKinematics& e, double lambda);
double width_rel_inverse_branch(const ElectronKinematics& e, double lambda);
double width_rel(const ElectronKinematics& e, double lambda, WidthRule rule);

/// Fluctuation energy e^2 delta^5 sigma1^2 sigma2 omega0 (sigma2^2 (v^2 - v_z^2)^2
/// + 16 sigma1^2 v_perp^2 v_z^2) / (96 (2 pi)^3 v^2), cm^-1. Throws for v = 0.
double fluctuation_energy(const pulse::SpreadParams& s, const ElectronKinematics& e);

/// Closed form of the resonant integral (V divided out):
/// real = pi v^2 omega0^4 delta^2/(2pi)^3 (delta s1^2 s2/8 - s2^2/2 atan(4 s2/(delta s1^2))),
/// imag = pi^2 v^2 omega0^4/(4(2pi)^3) * (delta^2 s2^2 if sqrt(s2/delta) < s1, else delta^4 s1^4).
std::complex<double> resonant_closed_form(const pulse::SpreadParams& s,
                                          const ElectronKinematics& e);

/// Ratio of the fluctuation energy to the collective-mode energy W phi^3(delta).
double mu_param(const units::PulseParams& p, const pulse::SpreadParams& s,
                const ElectronKinematics& e);

/// The three addends of the second-order energy correction. The resonant
/// parts are linear in n0; the imaginary part uses `rule` for its branch.
SecondOrderEnergy second_order_energy(const units::PulseParams& p,
                                      const pulse::SpreadParams& s,
                                      const ElectronKinematics& e, double n0,
                                      WidthRule rule = WidthRule::piecewise);

ValidityReport build_report(const units::PulseParams& p, const pulse::SpreadParams& s,
                            const ElectronKinematics& e, const Thresholds& thresholds = {});

}  // namespace smode::corrections
