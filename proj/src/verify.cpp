#include "smode/verify.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "smode/corrections.hpp"
#include "smode/fock.hpp"
#include "smode/lattice.hpp"
#include "smode/oracle.hpp"
#include "smode/report.hpp"
#include "smode/specfun.hpp"

namespace smode::cli {
namespace {

CheckResult make_check(std::string name, double measured, double tolerance,
                       std::string detail = {}) {
  const bool ok = std::isfinite(measured) && std::abs(measured) <= tolerance;
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, measured, tolerance,
          std::move(detail)};
}

double rel_dev(double value, double reference) {
  return reference != 0.0 ? std::abs(value - reference) / std::abs(reference)
                          : std::abs(value);
}

struct ReferenceCase {
  units::PulseParams pulse;
  pulse::SpreadParams spreads;
  corrections::ElectronKinematics kinematics;
};

ReferenceCase reference_case() {
  ReferenceCase c;
  c.pulse = units::to_natural(1e22, 800.0, 30.0, 1e-8);
  c.spreads = pulse::spread_params_for(c.pulse);
  c.kinematics = corrections::ElectronKinematics::from_components(0.127, 0.99);
  return c;
}

std::string describe(const pulse::SpreadParams& s, const corrections::ElectronKinematics& e) {
  std::ostringstream out;
  out << "sigma1=" << format_number(s.sigma1) << " sigma2=" << format_number(s.sigma2)
      << " omega0=" << format_number(s.omega0) << " v_perp=" << format_number(e.v_perp)
      << " v_z=" << format_number(e.v_z)
      << " lambda=" << format_number(corrections::lambda_param(s));
  return out.str();
}

void resonant_case(std::vector<CheckResult>& out, const std::string& label,
                   const pulse::SpreadParams& s, const corrections::ElectronKinematics& e,
                   const VerifyOptions& options) {
  const auto quad = oracle::resonant_pv_integral(s, e);
  std::complex<double> closed = corrections::resonant_closed_form(s, e);
  if (options.mutate_resonant_sign) {
    closed = -closed;
  }
  const std::string where = describe(s, e);
  std::ostringstream real_detail;
  real_detail << where << " quadrature=" << format_number(quad.value.real())
              << " closed=" << format_number(closed.real())
              << " converged=" << (quad.converged ? "yes" : "no");
  out.push_back(make_check("resonant real part [" + label + "]",
                           rel_dev(quad.value.real(), closed.real()), options.pv_tolerance,
                           real_detail.str()));

  std::ostringstream imag_detail;
  imag_detail << where << " quadrature=" << format_number(quad.value.imag())
              << " closed=" << format_number(closed.imag());
  const double crossover = std::sqrt(s.sigma2 / s.delta) / s.sigma1;
  auto imag = make_check("resonant imaginary part [" + label + "]",
                         rel_dev(quad.value.imag(), closed.imag()), options.pv_tolerance,
                         imag_detail.str());
  if (std::abs(crossover - 1.0) < options.crossover_margin) {
    imag.status = CheckStatus::skipped;
    imag.detail += " (at the Heaviside crossover)";
  }
  out.push_back(imag);

  std::ostringstream diag;
  diag << "v_z^2 term / kept term = " << format_number(quad.dropped_vz_ratio)
       << ", odd (omega0 - omega_k) term / kept term = "
       << format_number(quad.odd_term_energy_rel);
  out.push_back(make_check("resonant odd q.v term [" + label + "]",
                           quad.odd_term_velocity_rel, 1e-9, diag.str()));
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::skipped:
      return "SKIP";
  }
  return "FAIL";
}

std::vector<CheckResult> lattice_checks(const VerifyOptions& options) {
  const ReferenceCase c = reference_case();
  const auto coarse = oracle::ModeLattice::for_box(c.spreads, options.lattice_base,
                                                   options.lattice_base);
  const auto medium = coarse.refined();
  const auto fine = medium.refined();
  const double volume = 1.0;
  const auto s0 = oracle::lattice_sums(coarse, c.pulse, c.spreads, volume);
  const auto s1 = oracle::lattice_sums(medium, c.pulse, c.spreads, volume);
  const auto s2 = oracle::lattice_sums(fine, c.pulse, c.spreads, volume);

  const double full = specfun::phi(c.spreads.delta);
  const double target = c.pulse.pulse_energy_nat * full * full * full;
  const double ratio = oracle::richardson_ratio(s0.energy, s1.energy, s2.energy);
  const double extrapolated = s2.energy + (s2.energy - s1.energy) / 3.0;

  std::vector<CheckResult> out;
  std::ostringstream order;
  order << "energies " << format_number(s0.energy) << ", " << format_number(s1.energy) << ", "
        << format_number(s2.energy) << "; |ratio - 4| <= 0.5";
  auto order_check = make_check("lattice energy convergence order", ratio - 4.0, 0.5,
                                order.str());
  order_check.measured = ratio;
  out.push_back(order_check);
  out.push_back(make_check("lattice energy limit", rel_dev(extrapolated, target), 1e-6,
                           "extrapolated " + format_number(extrapolated) + " vs W phi^3 " +
                               format_number(target)));
  out.push_back(make_check("lattice fluctuation occupancy at delta*",
                           s2.f_occupancy / c.pulse.pulse_energy_nat, 1e-3,
                           "f / W on the finest lattice; sequence " +
                               format_number(s0.f_occupancy) + ", " +
                               format_number(s1.f_occupancy) + ", " +
                               format_number(s2.f_occupancy)));
  out.push_back(make_check("lattice mode count", rel_dev(s2.n_modes, c.spreads.n_modes), 1e-15));

  const auto avg = oracle::average_wavevector(fine);
  const double transverse = std::hypot(avg.k_avg[0], avg.k_avg[1]) / c.spreads.delta1;
  out.push_back(make_check("average transverse wavevector", transverse, 1e-12));
  out.push_back(make_check("average frequency", rel_dev(avg.omega_avg, c.spreads.omega0), 1e-12));
  return out;
}

std::vector<CheckResult> resonant_checks(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const ReferenceCase c = reference_case();
  resonant_case(out, "reference", c.spreads, c.kinematics, options);
  const auto sets = oracle::random_parameter_sets(options.random_sets, options.seed);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    resonant_case(out, "random " + std::to_string(i + 1), sets[i].spreads,
                  sets[i].kinematics, options);
  }
  return out;
}

std::vector<CheckResult> fluctuation_checks(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const ReferenceCase c = reference_case();
  auto one = [&](const std::string& label, const pulse::SpreadParams& s,
                 const corrections::ElectronKinematics& e) {
    const auto quad = oracle::fluctuation_integral(s, e);
    const double closed = corrections::fluctuation_energy(s, e);
    out.push_back(make_check("fluctuation integral [" + label + "]", rel_dev(quad.value, closed),
                             options.fluctuation_tolerance,
                             describe(s, e) + " quadrature=" + format_number(quad.value) +
                                 " closed=" + format_number(closed)));
  };
  one("reference", c.spreads, c.kinematics);
  const auto sets = oracle::random_parameter_sets(options.random_sets, options.seed);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    one("random " + std::to_string(i + 1), sets[i].spreads, sets[i].kinematics);
  }
  const auto axial = corrections::ElectronKinematics::from_components(0.0, 0.99);
  const auto quad = oracle::fluctuation_integral(c.spreads, axial);
  const double closed = corrections::fluctuation_energy(c.spreads, axial);
  out.push_back(make_check("fluctuation integral [v_perp = 0, v_z = v]", quad.value - closed,
                           1e-12, "absolute difference"));
  return out;
}

std::vector<CheckResult> fock_checks(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const int dim = options.fock_dimension;
  double worst_moment = 0.0;
  double worst_law = 0.0;
  double worst_linear = 0.0;
  std::string worst_at;
  for (double alpha : {0.0, 0.3, 1.0}) {
    for (double eta : {0.0, 0.2, 0.5}) {
      const fock::SqueezeParams law_params{alpha, eta, 0};
      worst_law = std::max(worst_law, fock::verify_transformation_law(law_params, dim));
      for (int n0 : {0, 1, 5}) {
        const fock::SqueezeParams sp{alpha, eta, n0};
        const auto m = fock::moments(sp, dim);
        const auto x = fock::expected_moments(sp);
        const double dev = std::max({std::abs(m.m1 - x.m1), std::abs(m.m2 - x.m2),
                                     std::abs(m.m3 - x.m3), std::abs(m.n_op - x.n_op),
                                     std::abs(m.mixed1 - x.mixed1),
                                     std::abs(m.mixed1_reversed - x.mixed1_reversed),
                                     std::abs(m.mixed2 - x.mixed2)});
        if (dev > worst_moment) {
          worst_moment = dev;
          worst_at = "alpha=" + format_number(alpha) + " eta=" + format_number(eta) +
                     " n0=" + std::to_string(n0);
        }
        worst_linear =
            std::max(worst_linear, std::abs(m.mixed2 - fock::mixed2_alpha_linear(sp)));
      }
    }
  }
  out.push_back(make_check("fock moment identities", worst_moment, options.fock_tolerance,
                           "D=" + std::to_string(dim) + " worst at " +
                               (worst_at.empty() ? std::string("-") : worst_at)));
  out.push_back(make_check("fock transformation law", worst_law, options.fock_tolerance,
                           "n < D/8 block, max over the alpha, eta grid"));
  // The alpha-linear reading of the sixth moment must be rejected by the matrices.
  out.push_back({"fock sixth moment, alpha-linear form rejected",
                 worst_linear > 1e-3 ? CheckStatus::pass : CheckStatus::fail, worst_linear,
                 1e-3,
                 "erratum: the identity needs +4 alpha^2 kappa (2 n0 + 1); the alpha-linear "
                 "+4 alpha kappa (2 n0 + 1) misses by up to " +
                     format_number(worst_linear)});
  const double kappa_gap =
      std::abs(fock::SqueezeParams{0.0, 0.37, 0}.kappa() - fock::kappa_from_cosh(0.37));
  out.push_back(make_check("kappa from cosh(eta)", kappa_gap, 1e-12));
  return out;
}

std::vector<CheckResult> commutator_checks() {
  std::vector<CheckResult> out;
  int wrong = 0;
  int column_wrong = 0;
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      for (std::int64_t k1 = 0; k1 < n; ++k1) {
        const auto c = fock::fluctuation_commutator(n, k, k1);
        const auto expected = fock::make_rational(k == k1 ? n - 1 : -1, n);
        wrong += c == expected ? 0 : 1;
      }
      column_wrong += fock::commutator_column_sum(n, k) == fock::Rational{0, 1} ? 0 : 1;
    }
  }
  out.push_back({"fluctuation commutator = delta - 1/N", wrong == 0 ? CheckStatus::pass
                                                                     : CheckStatus::fail,
                 static_cast<double>(wrong), 0.0,
                 "exact rationals, N = 2..12; sign erratum: delta - 1/N, not delta + 1/N"});
  out.push_back({"fluctuation commutator column sum", column_wrong == 0 ? CheckStatus::pass
                                                                         : CheckStatus::fail,
                 static_cast<double>(column_wrong), 0.0, "sum_k [c_k, c_k1^+] = 0"});
  return out;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  std::vector<CheckResult> all;
  for (auto group : {lattice_checks(options), resonant_checks(options),
                     fluctuation_checks(options), fock_checks(options), commutator_checks()}) {
    all.insert(all.end(), group.begin(), group.end());
  }
  return all;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed()) {
      return false;
    }
  }
  return true;
}

std::string render_checks_text(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  int failed = 0;
  for (const auto& c : checks) {
    out << to_string(c.status) << "  " << c.name << ": measured " << format_number(c.measured)
        << ", tolerance " << format_number(c.tolerance);
    if (!c.detail.empty()) {
      out << "  (" << c.detail << ")";
    }
    out << '\n';
    failed += c.passed() ? 0 : 1;
  }
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
      << '\n';
  return out.str();
}

nlohmann::json render_checks_json(const std::vector<CheckResult>& checks) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"status", to_string(c.status)},
                    {"measured", json_number(c.measured)},
                    {"tolerance", json_number(c.tolerance)},
                    {"detail", c.detail}});
  }
  return {{"checks", list}, {"passed", all_passed(checks)}};
}

}  // namespace smode::cli
