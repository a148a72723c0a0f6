#include <cmath>
#include <numbers>

#include "doctest.h"
#include "smode/errors.hpp"
#include "smode/pulse.hpp"
#include "smode/specfun.hpp"

using namespace smode;

namespace {

units::PulseParams reference_pulse() { return units::to_natural(1e22, 800.0, 30.0, 1e-8); }

}  // namespace

TEST_SUITE("pulse") {
  TEST_CASE("spreads of the reference pulse") {
    const auto s = pulse::spreads_from_pulse(reference_pulse());
    CHECK(s.sigma1 == doctest::Approx(0.127323954473516).epsilon(1e-13));
    CHECK(s.sigma2 == doctest::Approx(0.0141568998903364).epsilon(1e-13));
  }

  TEST_CASE("sigma2 is reciprocal in the duration") {
    const auto a = pulse::spreads_from_pulse(units::to_natural(1e22, 800.0, 30.0, 1e-8));
    const auto b = pulse::spreads_from_pulse(units::to_natural(1e22, 800.0, 300.0, 1e-8));
    CHECK(b.sigma2 == doctest::Approx(a.sigma2 / 10.0).epsilon(1e-14));
  }

  TEST_CASE("delta residual and root") {
    // mpmath references
    CHECK(pulse::delta_residual(3.0) == doctest::Approx(-0.62343633017446554).epsilon(1e-13));
    CHECK(pulse::delta_residual(4.0) == doctest::Approx(0.3042234601219976).epsilon(1e-13));
    CHECK(pulse::delta_residual(INFINITY) == 1.0);
    const double d = pulse::solve_delta();
    CHECK(d == doctest::Approx(3.542095813563357).epsilon(1e-12));
    CHECK(std::abs(pulse::delta_residual(d)) <= 1e-10);
    CHECK(pulse::solve_delta() == d);
  }

  TEST_CASE("delta residual is monotone on [3, 4]") {
    double previous = pulse::delta_residual(3.0);
    for (int i = 1; i <= 100; ++i) {
      const double value = pulse::delta_residual(3.0 + i / 100.0);
      CHECK(value > previous);
      previous = value;
    }
  }

  TEST_CASE("energy fractions") {
    const auto f = pulse::energy_fractions(pulse::solve_delta());
    CHECK(f.external_ratio == doctest::Approx(1.6390234947239483e-6).epsilon(1e-9));
    CHECK(1.0 - f.collective_fraction == doctest::Approx(1.6390208083303351e-6).epsilon(1e-6));
    CHECK(pulse::energy_fractions(1e-9).collective_fraction < 1e-20);
  }

  TEST_CASE("fluctuation occupancy") {
    const double w = 1.5e23;
    CHECK(std::abs(pulse::fluctuation_occupancy(pulse::solve_delta(), w)) <= w * 1e-9);
    CHECK(pulse::fluctuation_occupancy(3.0, w) < 0.0);
    CHECK(pulse::fluctuation_occupancy(INFINITY, w) == doctest::Approx(w));
  }

  TEST_CASE("box and mode count") {
    const auto p = reference_pulse();
    const auto s = pulse::spread_params_for(p, 2.0);
    CHECK(s.delta1 == doctest::Approx(s.delta * s.sigma1 * s.omega0).epsilon(1e-15));
    CHECK(s.delta2 == doctest::Approx(s.delta * s.sigma2 * s.omega0).epsilon(1e-15));
    CHECK(s.mode_volume == s.delta1 * s.delta1 * s.delta2);
    CHECK(s.n_modes == doctest::Approx(2.0 * s.mode_volume / (8.0 * std::pow(std::numbers::pi, 3))));
    CHECK_THROWS_AS(pulse::make_spread_params({1.2, 0.01}, 3.5, 1e4, 1.0), DomainError);
    CHECK_THROWS_AS(pulse::make_spread_params({0.1, 0.01}, 3.5, 1e4, 1e-30), DomainError);
  }

  TEST_CASE("coherent normalisation") {
    const auto p = reference_pulse();
    const auto s = pulse::spread_params_for(p);
    const double c = pulse::coherent_normalization(p, s, 1.0);
    const double back = c * c * std::pow(s.omega0, 4) * std::pow(std::numbers::pi, 1.5) *
                        s.sigma1 * s.sigma1 * s.sigma2 / (8.0 * std::pow(std::numbers::pi, 3));
    CHECK(back == doctest::Approx(p.pulse_energy_nat).epsilon(1e-13));
    auto p4 = p;
    p4.pulse_energy_nat *= 4.0;
    CHECK(pulse::coherent_normalization(p4, s, 1.0) == doctest::Approx(2.0 * c).epsilon(1e-14));
  }

  TEST_CASE("mode amplitude") {
    const auto s = pulse::spread_params_for(reference_pulse());
    CHECK(pulse::mode_amplitude(s, 0.0, 0.0, s.omega0).u == 1.0);
    const auto a = pulse::mode_amplitude(s, 3000.0, 4000.0, s.omega0 + 500.0);
    const auto b = pulse::mode_amplitude(s, 5000.0, 0.0, s.omega0 + 500.0);
    CHECK(a.u == doctest::Approx(b.u).epsilon(1e-14));
    CHECK(a.u > 0.0);
    CHECK(a.u < 1.0);
  }
}
