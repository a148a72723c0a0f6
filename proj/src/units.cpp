#include "smode/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "smode/errors.hpp"

namespace smode::units {
namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(field) + " must be a finite positive number, got " +
                      std::to_string(value));
  }
}

}  // namespace

PulseParams to_natural(double intensity, double wavelength_nm, double duration_fs,
                       double spot_cm2) {
  require_positive(intensity, "intensity");
  require_positive(wavelength_nm, "wavelength");
  require_positive(duration_fs, "duration");
  require_positive(spot_cm2, "spot");

  PulseParams p;
  p.intensity_lab = intensity;
  p.wavelength_lab = wavelength_nm;
  p.duration_lab = duration_fs;
  p.spot_area_lab = spot_cm2;

  const double duration_s = duration_fs * kSecondsPerFs;
  p.omega0 = 2.0 * std::numbers::pi / (wavelength_nm * kCmPerNm);
  p.tau_nat = kSpeedOfLight * duration_s;
  p.pulse_energy_nat = intensity * spot_cm2 * duration_s * kJoulesToInverseCm;
  return p;
}

LabPulse to_laboratory(double omega0, double tau_nat, double pulse_energy_nat,
                       double spot_cm2) {
  require_positive(omega0, "omega0");
  require_positive(tau_nat, "tau");
  require_positive(pulse_energy_nat, "pulse_energy");
  require_positive(spot_cm2, "spot");

  LabPulse lab;
  const double duration_s = tau_nat / kSpeedOfLight;
  lab.wavelength = 2.0 * std::numbers::pi / omega0 / kCmPerNm;
  lab.duration = duration_s / kSecondsPerFs;
  lab.spot_area = spot_cm2;
  lab.intensity = pulse_energy_nat / kJoulesToInverseCm / (spot_cm2 * duration_s);
  return lab;
}

}  // namespace smode::units
