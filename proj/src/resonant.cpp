#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>

#include "smode/errors.hpp"
#include "smode/oracle.hpp"

namespace smode::oracle {
namespace {

constexpr double kPi = std::numbers::pi;

enum class Cluster { none, low, high };

struct Parts {
  double real = 0.0;
  double dropped = 0.0;
  double shell = 0.0;

  Parts& operator+=(const Parts& o) {
    real += o.real;
    dropped += o.dropped;
    shell += o.shell;
    return *this;
  }
};

Parts scaled(const Parts& p, double w) { return {p.real * w, p.dropped * w, p.shell * w}; }

// n-point Gauss-Legendre on [a, b]. With clustering, x = a + (b-a) t^3 (or
// its mirror) turns a log singularity at that endpoint into a t^2 log t one.
template <class F>
Parts panel(F&& f, double a, double b, int n, Cluster cluster) {
  Parts acc;
  if (!(b > a)) {
    return acc;
  }
  const auto& rule = quadrature::gauss_legendre(n);
  const double len = b - a;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = 0.5 * (rule.nodes[i] + 1.0);
    const double w = 0.5 * rule.weights[i] * len;
    switch (cluster) {
      case Cluster::none:
        acc += scaled(f(a + len * t), w);
        break;
      case Cluster::low:
        acc += scaled(f(a + len * t * t * t), 3.0 * w * t * t);
        break;
      case Cluster::high: {
        const double u = 1.0 - t;
        acc += scaled(f(b - len * u * u * u), 3.0 * w * u * u);
        break;
      }
    }
  }
  return acc;
}

// PV integral_{-Z}^{Z} dq / (q + a).
double ray_log(double a, double z_half, QzMethod method) {
  if (method == QzMethod::analytic) {
    return std::log(std::abs((z_half + a) / (z_half - a)));
  }
  return quadrature::pv_regularize([a](double q) { return 1.0 / (q + a); }, -a, -z_half,
                                   z_half, 1e-12);
}

struct Geometry {
  double x_half = 0.0;
  double z_half = 0.0;
  double omega0 = 0.0;
  double rc = 0.0;  // singular radius, q_perp^2 / (2 omega0) = Z
  double cos_v = 1.0;
  double sin_v = 0.0;
  QzMethod method = QzMethod::analytic;

  double rmax(double phi) const {
    return x_half / std::max(std::abs(std::cos(phi)), std::abs(std::sin(phi)));
  }
};

// Radial integrals along one polar ray, weighted by the projection (v.q)^2.
Parts along_ray(const Geometry& g, double phi, int n) {
  const double rmax = g.rmax(phi);
  const double proj = std::cos(phi) * g.cos_v + std::sin(phi) * g.sin_v;
  auto radial = [&g](double r) {
    const double a = r * r / (2.0 * g.omega0);
    const double log_term = ray_log(a, g.z_half, g.method);
    return Parts{r * r * r * log_term, r * (-2.0 * a * g.z_half + a * a * log_term), 0.0};
  };
  const double inner = std::min(g.rc, rmax);
  Parts out = panel(radial, 0.0, inner, n, Cluster::high);
  if (rmax > g.rc) {
    out += panel(radial, g.rc, rmax, n, Cluster::low);
  }
  out.real *= proj * proj;
  out.shell = proj * proj * std::pow(inner, 4) / 4.0;
  return out;
}

// Eight sectors of pi/4, each with one face of the square; a sector is split
// at the angle where that face crosses the singular radius.
Parts integrate_level(const Geometry& g, int n) {
  Parts total;
  const double d = g.rc > g.x_half && g.rc < g.x_half * std::numbers::sqrt2
                       ? std::acos(g.x_half / g.rc)
                       : -1.0;
  for (int sector = 0; sector < 8; ++sector) {
    const double lo = sector * kPi / 4.0;
    const double hi = lo + kPi / 4.0;
    auto ray = [&g, n](double phi) { return along_ray(g, phi, n); };
    if (d <= 0.0) {
      total += panel(ray, lo, hi, n, Cluster::none);
      continue;
    }
    // Even sectors start on an axis, odd sectors end on one.
    const double cut = sector % 2 == 0 ? lo + d : hi - d;
    total += panel(ray, lo, cut, n, Cluster::high);
    total += panel(ray, cut, hi, n, Cluster::low);
  }
  return total;
}

}  // namespace

const char* to_string(BoxWidths widths) {
  return widths == BoxWidths::full ? "full" : "half";
}

BoxExtent box_extent(const pulse::SpreadParams& s, BoxWidths widths) {
  const double scale = widths == BoxWidths::full ? 0.5 : 1.0;
  return {scale * s.delta1, scale * s.delta2};
}

ResonantResult resonant_pv_integral(const pulse::SpreadParams& s,
                                    const corrections::ElectronKinematics& e,
                                    const ResonantOptions& options) {
  if (options.order < 2 || options.max_refinements < 0 || !(options.rel_tol > 0.0)) {
    throw DomainError("resonant_pv_integral: invalid quadrature options");
  }
  const BoxExtent box = box_extent(s, options.widths);
  Geometry g;
  g.x_half = box.transverse;
  g.z_half = box.longitudinal;
  g.omega0 = s.omega0;
  g.rc = std::sqrt(2.0 * s.omega0 * box.longitudinal);
  g.cos_v = std::cos(options.velocity_azimuth);
  g.sin_v = std::sin(options.velocity_azimuth);
  g.method = options.qz_method;

  const double two_pi3 = std::pow(2.0 * kPi, 3);
  const double v2 = e.v_perp * e.v_perp;

  ResonantResult out;
  std::complex<double> previous;
  double kept = 0.0;  // v_perp^2 times the PV integral, (2pi)^3 not divided out
  int n = options.order;
  for (int level = 0; level <= options.max_refinements; ++level, n *= 2) {
    const Parts parts = integrate_level(g, n);
    kept = v2 * parts.real;
    const std::complex<double> value{v2 * parts.real / two_pi3,
                                     kPi * v2 * parts.shell / two_pi3};
    out.evaluations += 16L * n * (2L * n + 1);
    out.refinements = level;
    out.dropped_vz_ratio =
        parts.real != 0.0 ? e.v_z * e.v_z * parts.dropped / (v2 * parts.real) : 0.0;
    if (v2 == 0.0) {
      out.dropped_vz_ratio = 0.0;
    }
    if (level > 0) {
      out.estimated_error = std::abs(value - previous);
      const double scale = std::max(std::abs(value), std::numeric_limits<double>::min());
      if (out.estimated_error <= options.rel_tol * scale) {
        out.value = value;
        out.converged = true;
        break;
      }
    }
    out.value = value;
    previous = value;
  }
  if (v2 == 0.0) {
    out.value = {0.0, 0.0};
    out.estimated_error = 0.0;
    out.converged = true;
  }

  // The two integrals dropped for being odd in q, by tensor Gauss-Legendre.
  const auto rx = quadrature::gauss_legendre(32, -box.transverse, box.transverse);
  const auto rz = quadrature::gauss_legendre(32, -box.longitudinal, box.longitudinal);
  const double vx = e.v_perp * g.cos_v;
  const double vy = e.v_perp * g.sin_v;
  double energy_term = 0.0;
  double velocity_term = 0.0;
  for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
    for (std::size_t j = 0; j < rx.nodes.size(); ++j) {
      for (std::size_t k = 0; k < rz.nodes.size(); ++k) {
        const double w = rx.weights[i] * rx.weights[j] * rz.weights[k];
        const double qx = rx.nodes[i];
        const double qy = rx.nodes[j];
        const double qz = rz.nodes[k];
        const double kz = s.omega0 + qz;
        // omega0 - |k0 + q| without cancellation.
        const double diff = -(qx * qx + qy * qy + qz * qz + 2.0 * s.omega0 * qz) /
                            (s.omega0 + std::sqrt(qx * qx + qy * qy + kz * kz));
        energy_term += w * diff;
        velocity_term += w * 2.0 * (qx * vx + qy * vy + qz * e.v_z);
      }
    }
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.odd_term_energy_rel = kept != 0.0 ? energy_term / std::abs(kept) : nan;
  out.odd_term_velocity_rel = kept != 0.0 ? velocity_term / std::abs(kept) : nan;
  return out;
}

std::vector<ParameterSet> random_parameter_sets(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) {
    return lo * std::pow(hi / lo, unit(rng));
  };
  const double delta = pulse::solve_delta();
  std::vector<ParameterSet> out;
  out.reserve(count);
  while (out.size() < count) {
    const pulse::Spreads spreads{log_uniform(0.03, 0.3), log_uniform(0.002, 0.03)};
    const double omega0 = log_uniform(2e4, 2e5);
    const double v_perp = spreads.sigma1 * (0.2 + 0.8 * unit(rng));
    const double v_z = std::sqrt(std::max(0.0, 0.998 * 0.998 - v_perp * v_perp)) * unit(rng);
    out.push_back({pulse::make_spread_params(spreads, delta, omega0, 1.0),
                   corrections::ElectronKinematics::from_components(v_perp, v_z)});
  }
  return out;
}

}  // namespace smode::oracle
