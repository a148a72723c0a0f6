#include "smode/lattice.hpp"

#include <cmath>
#include <numbers>

#include "smode/errors.hpp"
#include "smode/kernels.hpp"

namespace smode::oracle {
namespace {

void check_axis(const LatticeAxis& axis, const char* name) {
  if (axis.count == 0 || !(axis.lo < axis.hi)) {
    throw DomainError(std::string("lattice axis ") + name + " is empty");
  }
}

std::vector<double> gaussian_factors(const LatticeAxis& axis, double center, double width,
                                     AmplitudeShape shape) {
  std::vector<double> out(axis.count, 1.0);
  if (shape == AmplitudeShape::flat) {
    return out;
  }
  for (std::size_t i = 0; i < axis.count; ++i) {
    const double d = axis.node(i) - center;
    out[i] = std::exp(-d * d / (2.0 * width * width));
  }
  return out;
}

}  // namespace

std::vector<double> LatticeAxis::nodes() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = node(i);
  }
  return out;
}

ModeLattice::ModeLattice(LatticeAxis kx, LatticeAxis ky, LatticeAxis omega)
    : kx_(kx), ky_(ky), omega_(omega) {
  check_axis(kx_, "k_perp_x");
  check_axis(ky_, "k_perp_y");
  check_axis(omega_, "omega");
}

ModeLattice ModeLattice::for_box(const pulse::SpreadParams& s, std::size_t transverse_count,
                                 std::size_t omega_count) {
  return ModeLattice({-s.delta1, s.delta1, transverse_count},
                     {-s.delta1, s.delta1, transverse_count},
                     {s.omega0 - s.delta2, s.omega0 + s.delta2, omega_count});
}

ModeLattice ModeLattice::refined() const {
  return ModeLattice({kx_.lo, kx_.hi, 2 * kx_.count}, {ky_.lo, ky_.hi, 2 * ky_.count},
                     {omega_.lo, omega_.hi, 2 * omega_.count});
}

double ModeLattice::box_volume() const {
  return (kx_.hi - kx_.lo) * (ky_.hi - ky_.lo) * (omega_.hi - omega_.lo);
}

LatticeNode ModeLattice::node(std::size_t index) const {
  if (index >= size()) {
    throw DomainError("lattice node index out of range");
  }
  const std::size_t iw = index % omega_.count;
  const std::size_t rest = index / omega_.count;
  const std::size_t iy = rest % ky_.count;
  const std::size_t ix = rest / ky_.count;
  return {kx_.node(ix), ky_.node(iy), omega_.node(iw)};
}

LatticeSums lattice_sums(const ModeLattice& lattice, const units::PulseParams& p,
                         const pulse::SpreadParams& s, double volume, AmplitudeShape shape) {
  if (lattice.size() == 0) {
    throw DomainError("lattice_sums: empty lattice");
  }
  const double transverse_width = s.sigma1 * s.omega0;
  const double omega_width = s.sigma2 * s.omega0;
  const auto fx = gaussian_factors(lattice.kx(), 0.0, transverse_width, shape);
  const auto fy = gaussian_factors(lattice.ky(), 0.0, transverse_width, shape);
  const auto fw = gaussian_factors(lattice.omega(), s.omega0, omega_width, shape);

  // Every node is visited: one kernel call per (kx, ky) row over omega.
  kernels::CompensatedSum sum_u;
  kernels::CompensatedSum sum_u2;
  for (double x : fx) {
    for (double y : fy) {
      const auto row = kernels::scaled_sums(fw, x * y);
      sum_u.add(row.sum);
      sum_u2.add(row.sum_sq);
    }
  }

  const double cell = lattice.cell_volume();
  const double integral_u = sum_u.value() * cell;
  const double integral_u2 = sum_u2.value() * cell;

  const double c = pulse::coherent_normalization(p, s, volume);
  const double two_pi3 = std::pow(2.0 * std::numbers::pi, 3);
  const double density = c * c * volume / two_pi3;

  LatticeSums out;
  out.node_count = lattice.size();
  out.energy = density * s.omega0 * integral_u2;
  out.n_modes = volume * s.mode_volume / two_pi3;
  out.f_occupancy =
      density * s.omega0 * (integral_u2 - integral_u * integral_u / s.mode_volume);
  out.external_energy = p.pulse_energy_nat - out.energy;
  out.variance_occupancy =
      density * (integral_u2 - integral_u * integral_u / lattice.box_volume());
  return out;
}

AverageWavevector average_wavevector(const ModeLattice& lattice) {
  if (lattice.size() == 0) {
    throw DomainError("average_wavevector: empty lattice");
  }
  kernels::CompensatedSum sx;
  kernels::CompensatedSum sy;
  kernels::CompensatedSum sw;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const LatticeNode n = lattice.node(i);
    sx.add(n.k_perp_x);
    sy.add(n.k_perp_y);
    sw.add(n.omega);
  }
  const double count = static_cast<double>(lattice.size());
  AverageWavevector out;
  out.omega_avg = sw.value() / count;
  out.k_avg = {sx.value() / count, sy.value() / count, out.omega_avg};
  return out;
}

std::vector<pulse::ModeAmplitude> lattice_amplitudes(const ModeLattice& lattice,
                                                     const pulse::SpreadParams& s) {
  std::vector<pulse::ModeAmplitude> out;
  out.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const LatticeNode n = lattice.node(i);
    out.push_back(pulse::mode_amplitude(s, n.k_perp_x, n.k_perp_y, n.omega));
  }
  return out;
}

double richardson_ratio(double coarse, double medium, double fine) {
  return (coarse - medium) / (medium - fine);
}

}  // namespace smode::oracle
