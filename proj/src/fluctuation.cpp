#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "smode/errors.hpp"
#include "smode/kernels.hpp"
#include "smode/oracle.hpp"

namespace smode::oracle {
namespace {

// The integrand is (g.q)^2 with g = A k0 - B v.
std::array<double, 3> coupling_vector(double omega0, const corrections::ElectronKinematics& e,
                                      double azimuth) {
  if (!(e.v > 0.0)) {
    throw DomainError("fluctuation integral diverges for v = 0");
  }
  const double k0_dot_v = omega0 * e.v_z;
  const double a = -e.v / (2.0 * std::pow(omega0, 2.5)) +
                   5.0 * k0_dot_v * k0_dot_v / (2.0 * e.v * std::pow(omega0, 4.5));
  const double b = 2.0 * k0_dot_v / (e.v * std::pow(omega0, 2.5));
  return {-b * e.v_perp * std::cos(azimuth), -b * e.v_perp * std::sin(azimuth),
          a * omega0 - b * e.v_z};
}

double prefactor(double omega0) {
  return corrections::charge_squared() /
         (2.0 * std::pow(2.0 * std::numbers::pi, 3) * omega0);
}

double tensor_gauss(const std::array<double, 3>& g, const BoxExtent& box, int order) {
  const auto rx = quadrature::gauss_legendre(order, -box.transverse, box.transverse);
  const auto rz = quadrature::gauss_legendre(order, -box.longitudinal, box.longitudinal);
  kernels::CompensatedSum acc;
  for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
    for (std::size_t j = 0; j < rx.nodes.size(); ++j) {
      const double offset = g[0] * rx.nodes[i] + g[1] * rx.nodes[j];
      const double row = kernels::weighted_square_affine(rz.weights, rz.nodes, g[2], offset);
      acc.add(rx.weights[i] * rx.weights[j] * row);
    }
  }
  return acc.value();
}

}  // namespace

quadrature::QuadratureResult<double> fluctuation_integral(
    const pulse::SpreadParams& s, const corrections::ElectronKinematics& e,
    const FluctuationOptions& options) {
  if (options.order < 1) {
    throw DomainError("fluctuation_integral: order must be positive");
  }
  const auto g = coupling_vector(s.omega0, e, options.velocity_azimuth);
  const BoxExtent box = box_extent(s, options.widths);
  const double scale = prefactor(s.omega0);
  const double coarse = scale * tensor_gauss(g, box, options.order);
  const double fine = scale * tensor_gauss(g, box, 2 * options.order);

  quadrature::QuadratureResult<double> out;
  out.value = fine;
  out.estimated_error = std::abs(fine - coarse);
  out.evaluations = static_cast<long>(options.order) * options.order * options.order * 9;
  out.converged = out.estimated_error <= 1e-12 * std::abs(fine) + 1e-300;
  return out;
}

quadrature::QuadratureResult<double> fluctuation_integral_mc(
    const pulse::SpreadParams& s, const corrections::ElectronKinematics& e,
    std::uint64_t samples, std::uint64_t seed, BoxWidths widths) {
  if (samples < 2) {
    throw DomainError("fluctuation_integral_mc: need at least two samples");
  }
  const auto g = coupling_vector(s.omega0, e, 0.0);
  const BoxExtent box = box_extent(s, widths);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  kernels::CompensatedSum sum;
  kernels::CompensatedSum sum_sq;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double qx = box.transverse * unit(rng);
    const double qy = box.transverse * unit(rng);
    const double qz = box.longitudinal * unit(rng);
    const double d = g[0] * qx + g[1] * qy + g[2] * qz;
    sum.add(d * d);
    sum_sq.add(d * d * d * d);
  }
  const double count = static_cast<double>(samples);
  const double mean = sum.value() / count;
  const double variance = std::max(0.0, sum_sq.value() / count - mean * mean);
  const double volume = 8.0 * box.transverse * box.transverse * box.longitudinal;
  const double scale = prefactor(s.omega0) * volume;

  quadrature::QuadratureResult<double> out;
  out.value = scale * mean;
  out.estimated_error = scale * std::sqrt(variance / (count - 1.0));
  out.evaluations = static_cast<long>(samples);
  out.converged = true;
  return out;
}

}  // namespace smode::oracle
