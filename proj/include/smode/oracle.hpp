#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "smode/corrections.hpp"
#include "smode/pulse.hpp"
#include "smode/quadrature.hpp"

// Brute-force quadrature of the resonant (principal-value) and fluctuation
// integrals over the Delta box in q = k - k0, for comparison with the
// closed forms in corrections. All results have the volume V divided out.

namespace smode::oracle {

/// How the box widths enter the integration region: `full` integrates
/// |q_x|, |q_y| <= delta1/2, |q_z| <= delta2/2 (box volume = mode volume);
/// `half` integrates |q_x|, |q_y| <= delta1, |q_z| <= delta2.
enum class BoxWidths { full, half };

const char* to_string(BoxWidths widths);

struct BoxExtent {
  double transverse = 0.0;    // half-extent in q_x and q_y, cm^-1
  double longitudinal = 0.0;  // half-extent in q_z, cm^-1
};

BoxExtent box_extent(const pulse::SpreadParams& s, BoxWidths widths);

/// Per-ray q_z integral: analytic log, or numeric via pv_regularize.
enum class QzMethod { analytic, numeric };

struct ResonantOptions {
  int order = 64;            // Gauss-Legendre nodes per panel, doubled on refinement
  int max_refinements = 4;
  double rel_tol = 1e-4;
  BoxWidths widths = BoxWidths::full;
  QzMethod qz_method = QzMethod::analytic;
  double velocity_azimuth = 0.0;  // direction of v_perp in the transverse plane, rad
};

struct ResonantResult : quadrature::QuadratureResult<std::complex<double>> {
  int refinements = 0;
  // Contribution of the v_z^2 q_z^2 numerator term relative to the real part.
  double dropped_vz_ratio = 0.0;
  // Box integrals of (omega0 - |k0 + q|) and of 2 q.v, each relative to the
  // magnitude of the kept real part; NaN when that vanishes.
  double odd_term_energy_rel = 0.0;
  double odd_term_velocity_rel = 0.0;
};

/// (1/(2pi)^3) integral d^3q (v_perp.q)^2 / (q_z + q_perp^2/(2 omega0)), with
/// the pole taken as principal value (real part) plus i pi times the
/// delta-shell term (imaginary part). q_z is integrated per transverse ray;
/// the transverse plane is covered by eight polar sectors split at the
/// singular radius sqrt(2 omega0 Z). Not converged -> converged = false.
ResonantResult resonant_pv_integral(const pulse::SpreadParams& s,
                                    const corrections::ElectronKinematics& e,
                                    const ResonantOptions& options = {});

struct FluctuationOptions {
  int order = 8;  // integrand is quadratic, so 2 nodes per axis are already exact
  BoxWidths widths = BoxWidths::full;
  double velocity_azimuth = 0.0;
};

/// e^2/(2(2pi)^3 omega0) integral d^3q |A (k0.q) - B (v.q)|^2 by tensor
/// Gauss-Legendre, with A = -v/(2 omega0^{5/2}) + 5(k0.v)^2/(2 v omega0^{9/2})
/// and B = 2(k0.v)/(v omega0^{5/2}). estimated_error compares order and 2*order.
quadrature::QuadratureResult<double> fluctuation_integral(
    const pulse::SpreadParams& s, const corrections::ElectronKinematics& e,
    const FluctuationOptions& options = {});

/// Same integral by uniform Monte Carlo with an explicit seed;
/// estimated_error is one standard error.
quadrature::QuadratureResult<double> fluctuation_integral_mc(
    const pulse::SpreadParams& s, const corrections::ElectronKinematics& e,
    std::uint64_t samples, std::uint64_t seed, BoxWidths widths = BoxWidths::full);

struct ParameterSet {
  pulse::SpreadParams spreads;
  corrections::ElectronKinematics kinematics;
};

/// Seeded draws with 0.03 <= sigma1 <= 0.3, 0.002 <= sigma2 <= 0.03,
/// omega0 in [2e4, 2e5] cm^-1, v_perp <= sigma1 and v < 0.999.
std::vector<ParameterSet> random_parameter_sets(std::size_t count, std::uint64_t seed);

}  // namespace smode::oracle
