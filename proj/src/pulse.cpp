#include "smode/pulse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "smode/errors.hpp"
#include "smode/specfun.hpp"

namespace smode::pulse {
namespace {

constexpr double kPi = std::numbers::pi;

void require_spread(double sigma, const char* name) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError(std::string(name) + " must lie in (0, 1), got " + std::to_string(sigma));
  }
}

}  // namespace

Spreads spreads_from_pulse(const units::PulseParams& p) {
  return {1.0 / (p.omega0 * std::sqrt(p.spot_area_lab)), 1.0 / (p.omega0 * p.tau_nat)};
}

SpreadParams make_spread_params(const Spreads& spreads, double delta, double omega0,
                                double volume) {
  require_spread(spreads.sigma1, "sigma1");
  require_spread(spreads.sigma2, "sigma2");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw DomainError("delta must be finite and positive");
  }
  if (!(omega0 > 0.0)) {
    throw DomainError("omega0 must be positive");
  }
  if (!(volume > 0.0)) {
    throw DomainError("normalisation volume must be positive");
  }

  SpreadParams s;
  s.sigma1 = spreads.sigma1;
  s.sigma2 = spreads.sigma2;
  s.delta = delta;
  s.omega0 = omega0;
  s.delta1 = delta * spreads.sigma1 * omega0;
  s.delta2 = delta * spreads.sigma2 * omega0;
  s.mode_volume = s.delta1 * s.delta1 * s.delta2;
  s.volume = volume;
  s.n_modes = volume * s.mode_volume / (8.0 * kPi * kPi * kPi);
  if (s.n_modes < 1.0) {
    throw DomainError("normalisation volume too small: box holds " +
                      std::to_string(s.n_modes) + " modes");
  }
  return s;
}

SpreadParams spread_params_for(const units::PulseParams& p, double volume) {
  return make_spread_params(spreads_from_pulse(p), solve_delta(), p.omega0, volume);
}

double delta_residual(double delta) {
  if (!(delta > 0.0)) {
    throw DomainError("delta_residual: delta must be positive");
  }
  if (std::isinf(delta)) {
    return 1.0;
  }
  const double half = specfun::phi(delta / std::numbers::sqrt2);
  const double full = specfun::phi(delta);
  const double half3 = half * half * half;
  return 1.0 - 8.0 * std::pow(kPi, 1.5) / (delta * delta * delta) * (half3 * half3) /
                   (full * full * full);
}

specfun::RootResult solve_delta_detailed() {
  return specfun::find_root(delta_residual, 3.0, 4.0, 1e-12);
}

double solve_delta() {
  return solve_delta_detailed().root;
}

EnergyFractions energy_fractions(double delta) {
  if (!(delta > 0.0)) {
    throw DomainError("energy_fractions: delta must be positive");
  }
  // 1 - phi^3 through the complement keeps the tiny leakage accurate.
  const double c = specfun::phi_complement(delta);
  const double outside = c * (3.0 - 3.0 * c + c * c);
  const double inside = 1.0 - outside;
  return {inside, outside / inside};
}

double fluctuation_occupancy(double delta, double pulse_energy_nat) {
  if (!(delta > 0.0)) {
    throw DomainError("fluctuation_occupancy: delta must be positive");
  }
  const double full = specfun::phi(delta);
  return pulse_energy_nat * full * full * full * delta_residual(delta);
}

double coherent_normalization(const units::PulseParams& p, const SpreadParams& s,
                              double volume) {
  if (!(volume > 0.0)) {
    throw DomainError("coherent_normalization: volume must be positive");
  }
  const double w4 = p.omega0 * p.omega0 * p.omega0 * p.omega0;
  return std::sqrt(8.0 * std::pow(kPi, 1.5) * p.pulse_energy_nat /
                   (volume * s.sigma1 * s.sigma1 * s.sigma2 * w4));
}

ModeAmplitude mode_amplitude(const SpreadParams& s, double k_perp_x, double k_perp_y,
                             double omega) {
  const double k_perp2 = k_perp_x * k_perp_x + k_perp_y * k_perp_y;
  const double a = s.sigma1 * s.omega0;
  const double b = s.sigma2 * s.omega0;
  const double dw = omega - s.omega0;
  const double u = std::exp(-k_perp2 / (2.0 * a * a)) * std::exp(-dw * dw / (2.0 * b * b));
  return {k_perp_x, k_perp_y, omega, u};
}

}  // namespace smode::pulse
