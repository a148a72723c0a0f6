#pragma once

// Laboratory <-> natural-unit conversions (hbar = c = 1, lengths in cm,
// energies and frequencies in cm^-1).

namespace smode::units {

/// Speed of light, cm/s.
inline constexpr double kSpeedOfLight = 2.99792458e10;
/// Energy conversion, cm^-1 per joule (1 / (h c) with c in cm/s).
inline constexpr double kJoulesToInverseCm = 5.0341e22;
inline constexpr double kCmPerNm = 1e-7;
inline constexpr double kSecondsPerFs = 1e-15;

/// A laser pulse as specified in the lab plus its derived natural-unit values.
struct PulseParams {
  double intensity_lab = 0.0;   // W/cm^2
  double wavelength_lab = 0.0;  // nm
  double duration_lab = 0.0;    // fs
  double spot_area_lab = 0.0;   // cm^2

  double omega0 = 0.0;            // cm^-1, 2 pi / wavelength
  double tau_nat = 0.0;           // cm, c * duration
  double pulse_energy_nat = 0.0;  // cm^-1, I S tau converted from joules
};

struct LabPulse {
  double intensity = 0.0;   // W/cm^2
  double wavelength = 0.0;  // nm
  double duration = 0.0;    // fs
  double spot_area = 0.0;   // cm^2
};

/// Throws DomainError naming the first non-positive (or non-finite) input.
PulseParams to_natural(double intensity, double wavelength_nm, double duration_fs,
                       double spot_cm2);

/// Inverse of to_natural.
LabPulse to_laboratory(double omega0, double tau_nat, double pulse_energy_nat,
                       double spot_cm2);

}  // namespace smode::units
