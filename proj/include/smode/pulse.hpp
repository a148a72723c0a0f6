#pragma once

#include "smode/specfun.hpp"
#include "smode/units.hpp"

// Gaussian wave-packet model of a quasi-monochromatic pulse: spreads, the
// optimal box parameter delta, the box itself, and energy bookkeeping.
//
// Box convention: the highly populated region is the rectangular box
//   |k_perp_x|, |k_perp_y| <= delta1,   |omega - omega0| <= delta2,
// with half-widths delta1 = delta*sigma1*omega0 and delta2 = delta*sigma2*omega0.
// Gaussian-weighted integrals over this box produce phi(delta) factors. The
// mode volume used for the mode count is delta1^2 * delta2.

namespace smode::pulse {

struct Spreads {
  double sigma1 = 0.0;  // angular spread
  double sigma2 = 0.0;  // frequency spread
};

struct SpreadParams {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double delta = 0.0;
  double omega0 = 0.0;       // cm^-1
  double delta1 = 0.0;       // cm^-1, delta * sigma1 * omega0
  double delta2 = 0.0;       // cm^-1, delta * sigma2 * omega0
  double mode_volume = 0.0;  // cm^-3, delta1^2 * delta2
  double volume = 0.0;       // cm^3, normalisation volume V
  double n_modes = 0.0;      // V * mode_volume / (8 pi^3)
};

struct ModeAmplitude {
  double k_perp_x = 0.0;
  double k_perp_y = 0.0;
  double omega = 0.0;
  double u = 0.0;
};

struct EnergyFractions {
  double collective_fraction = 0.0;  // phi^3(delta)
  double external_ratio = 0.0;       // (1 - phi^3) / phi^3
};

/// sigma2 = 1/(omega0 tau), sigma1 = 1/(omega0 sqrt(S)).
Spreads spreads_from_pulse(const units::PulseParams& p);

/// Assembles the box for given spreads and delta. Throws DomainError unless
/// 0 < sigma < 1, delta > 0, and the volume holds at least one mode.
SpreadParams make_spread_params(const Spreads& spreads, double delta, double omega0,
                                double volume);

/// Convenience: spreads from the pulse, delta = solve_delta().
SpreadParams spread_params_for(const units::PulseParams& p, double volume = 1.0);

/// 1 - (8 pi^{3/2} / delta^3) phi^6(delta/sqrt 2) / phi^3(delta).
double delta_residual(double delta);

/// Root of delta_residual on [3, 4] (approx. 3.54), |residual| <= 1e-10.
double solve_delta();
specfun::RootResult solve_delta_detailed();

EnergyFractions energy_fractions(double delta);

/// Closed-form fluctuation-mode occupancy energy:
/// W phi^3(delta) (1 - 8 pi^{3/2} phi^6(delta/sqrt 2) / (delta^3 phi^3(delta))).
double fluctuation_occupancy(double delta, double pulse_energy_nat);

/// Coherent-state normalisation C = sqrt(8 pi^{3/2} W / (V sigma1^2 sigma2 omega0^4)).
double coherent_normalization(const units::PulseParams& p, const SpreadParams& s,
                              double volume);

/// Gaussian packet amplitude at a mode.
ModeAmplitude mode_amplitude(const SpreadParams& s, double k_perp_x, double k_perp_y,
                             double omega);

}  // namespace smode::pulse
