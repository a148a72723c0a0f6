#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "smode/pulse.hpp"
#include "smode/units.hpp"

// Brute-force mode lattice over the Delta box: discrete stand-in for the
// mode sums sum_{k < Delta}. Nodes sit at cell midpoints, so sums converge
// to the box integrals at O(h^2).

namespace smode::oracle {

struct LatticeAxis {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;

  double spacing() const { return (hi - lo) / static_cast<double>(count); }
  double node(std::size_t i) const { return lo + (static_cast<double>(i) + 0.5) * spacing(); }
  std::vector<double> nodes() const;
};

struct LatticeNode {
  double k_perp_x = 0.0;
  double k_perp_y = 0.0;
  double omega = 0.0;
};

class ModeLattice {
 public:
  /// Throws DomainError for an empty axis or lo >= hi.
  ModeLattice(LatticeAxis kx, LatticeAxis ky, LatticeAxis omega);

  /// Lattice spanning the box |kx|, |ky| <= delta1, |omega - omega0| <= delta2.
  static ModeLattice for_box(const pulse::SpreadParams& s, std::size_t transverse_count,
                             std::size_t omega_count);

  /// Same extents, twice the nodes per axis (h -> h/2).
  ModeLattice refined() const;

  const LatticeAxis& kx() const { return kx_; }
  const LatticeAxis& ky() const { return ky_; }
  const LatticeAxis& omega() const { return omega_; }

  std::size_t size() const { return kx_.count * ky_.count * omega_.count; }
  double cell_volume() const { return kx_.spacing() * ky_.spacing() * omega_.spacing(); }
  double box_volume() const;

  /// Row-major (kx slowest, omega fastest).
  LatticeNode node(std::size_t index) const;

 private:
  LatticeAxis kx_;
  LatticeAxis ky_;
  LatticeAxis omega_;
};

enum class AmplitudeShape { gaussian, flat };

struct LatticeSums {
  double energy = 0.0;           // cm^-1, C^2 V/(2pi)^3 sum omega0 |u|^2 dV
  double n_modes = 0.0;          // V * delta1^2 delta2 / (8 pi^3)
  double f_occupancy = 0.0;      // cm^-1, difference of the two occupancy terms
  double external_energy = 0.0;  // cm^-1, W - energy
  // C^2 V/(2pi)^3 sum |u_k - mean(u)|^2 dV with the node-count mean; >= 0.
  double variance_occupancy = 0.0;
  std::size_t node_count = 0;
};

/// Discrete mode sums over the lattice. The amplitude is the Gaussian packet
/// (or identically 1 for `flat`). The occupancy uses the mode count of the
/// Delta volume, f = C^2 V/(2pi)^3 (sum|u|^2 dV - |sum u dV|^2 / (delta1^2 delta2)).
LatticeSums lattice_sums(const ModeLattice& lattice, const units::PulseParams& p,
                         const pulse::SpreadParams& s, double volume,
                         AmplitudeShape shape = AmplitudeShape::gaussian);

struct AverageWavevector {
  double omega_avg = 0.0;
  std::array<double, 3> k_avg{};  // (k_perp_x, k_perp_y, k_z = omega)
};

/// Unweighted node means (1/N) sum_k.
AverageWavevector average_wavevector(const ModeLattice& lattice);

/// Amplitudes at every node; meant for small lattices.
std::vector<pulse::ModeAmplitude> lattice_amplitudes(const ModeLattice& lattice,
                                                     const pulse::SpreadParams& s);

/// (a - b) / (b - c) for a sequence at h, h/2, h/4; ~4 for O(h^2) convergence.
double richardson_ratio(double coarse, double medium, double fine);

}  // namespace smode::oracle
