#include <cmath>

#include "doctest.h"
#include "smode/errors.hpp"
#include "smode/lattice.hpp"
#include "smode/specfun.hpp"

using namespace smode;

namespace {

struct Setup {
  units::PulseParams p = units::to_natural(1e22, 800.0, 30.0, 1e-8);
  pulse::SpreadParams s = pulse::spread_params_for(p);
};

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("geometry") {
    const Setup x;
    const auto lat = oracle::ModeLattice::for_box(x.s, 8, 6);
    CHECK(lat.size() == 8 * 8 * 6);
    CHECK(lat.refined().size() == 8 * lat.size());
    CHECK(lat.box_volume() == doctest::Approx(8.0 * x.s.mode_volume).epsilon(1e-14));
    CHECK(lat.cell_volume() * lat.size() == doctest::Approx(lat.box_volume()).epsilon(1e-14));
    const auto first = lat.node(0);
    const auto last = lat.node(lat.size() - 1);
    CHECK(first.k_perp_x == doctest::Approx(-x.s.delta1 + x.s.delta1 / 8.0));
    CHECK(last.omega == doctest::Approx(x.s.omega0 + x.s.delta2 - x.s.delta2 / 6.0));
    CHECK_THROWS_AS(lat.node(lat.size()), DomainError);
    CHECK_THROWS_AS(oracle::ModeLattice({0, 1, 0}, {0, 1, 1}, {0, 1, 1}), DomainError);
    CHECK(oracle::lattice_amplitudes(lat, x.s).size() == lat.size());
  }

  TEST_CASE("energy converges at second order") {
    const Setup x;
    const auto a = oracle::ModeLattice::for_box(x.s, 32, 32);
    const auto e0 = oracle::lattice_sums(a, x.p, x.s, 1.0).energy;
    const auto e1 = oracle::lattice_sums(a.refined(), x.p, x.s, 1.0).energy;
    const auto e2 = oracle::lattice_sums(a.refined().refined(), x.p, x.s, 1.0).energy;
    const double ratio = oracle::richardson_ratio(e0, e1, e2);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
    const double full = specfun::phi(x.s.delta);
    CHECK(e2 == doctest::Approx(x.p.pulse_energy_nat * full * full * full).epsilon(1e-7));
  }

  TEST_CASE("occupancy vanishes at delta*") {
    const Setup x;
    const auto lat = oracle::ModeLattice::for_box(x.s, 64, 64);
    const auto sums = oracle::lattice_sums(lat, x.p, x.s, 1.0);
    CHECK(std::abs(sums.f_occupancy) <= 1e-3 * x.p.pulse_energy_nat);
    CHECK(sums.n_modes == x.s.n_modes);
    CHECK(sums.external_energy == doctest::Approx(x.p.pulse_energy_nat - sums.energy));
    CHECK(sums.variance_occupancy >= 0.0);
  }

  TEST_CASE("occupancy away from delta* follows the closed form") {
    const Setup x;
    const auto s = pulse::make_spread_params({x.s.sigma1, x.s.sigma2}, 3.0, x.s.omega0, 1.0);
    const auto sums = oracle::lattice_sums(oracle::ModeLattice::for_box(s, 128, 128), x.p, s, 1.0);
    CHECK(sums.f_occupancy ==
          doctest::Approx(pulse::fluctuation_occupancy(3.0, x.p.pulse_energy_nat)).epsilon(1e-3));
  }

  TEST_CASE("flat amplitude has no spread about its mean") {
    const Setup x;
    const auto lat = oracle::ModeLattice::for_box(x.s, 8, 8);
    const auto sums = oracle::lattice_sums(lat, x.p, x.s, 1.0, oracle::AmplitudeShape::flat);
    CHECK(std::abs(sums.variance_occupancy) <= 1e-12 * sums.energy / x.s.omega0);
  }

  TEST_CASE("average wavevector") {
    const Setup x;
    const auto lat = oracle::ModeLattice::for_box(x.s, 16, 16);
    const auto avg = oracle::average_wavevector(lat);
    CHECK(std::abs(avg.k_avg[0]) <= 1e-12 * x.s.delta1);
    CHECK(std::abs(avg.k_avg[1]) <= 1e-12 * x.s.delta1);
    CHECK(avg.omega_avg == doctest::Approx(x.s.omega0).epsilon(1e-14));
    const oracle::ModeLattice upper({-1, 1, 4}, {-1, 1, 4},
                                    {x.s.omega0, x.s.omega0 + x.s.delta2, 10});
    CHECK(oracle::average_wavevector(upper).omega_avg ==
          doctest::Approx(x.s.omega0 + x.s.delta2 / 2.0).epsilon(1e-14));
  }
}
