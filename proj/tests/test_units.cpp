#include <cmath>
#include <numbers>

#include "doctest.h"
#include "smode/errors.hpp"
#include "smode/units.hpp"

using namespace smode;

TEST_SUITE("units") {
  TEST_CASE("reference pulse in natural units") {
    const auto p = units::to_natural(1e22, 800.0, 30.0, 1e-8);
    CHECK(p.omega0 == doctest::Approx(78539.8163397448).epsilon(1e-13));
    CHECK(p.tau_nat == doctest::Approx(8.99377374e-4).epsilon(1e-13));
    // 3 J at 5.0341e22 cm^-1 per joule
    CHECK(p.pulse_energy_nat == doctest::Approx(1.51023e23).epsilon(1e-13));
    CHECK(p.omega0 == doctest::Approx(7.85e4).epsilon(1e-3));
  }

  TEST_CASE("pulse energy is multilinear in I, S, tau") {
    const auto base = units::to_natural(1e20, 800.0, 30.0, 1e-8);
    CHECK(units::to_natural(3e20, 800.0, 30.0, 1e-8).pulse_energy_nat ==
          doctest::Approx(3.0 * base.pulse_energy_nat).epsilon(1e-14));
    CHECK(units::to_natural(1e20, 800.0, 30.0, 5e-8).pulse_energy_nat ==
          doctest::Approx(5.0 * base.pulse_energy_nat).epsilon(1e-14));
    CHECK(units::to_natural(1e20, 800.0, 60.0, 1e-8).pulse_energy_nat ==
          doctest::Approx(2.0 * base.pulse_energy_nat).epsilon(1e-14));
    CHECK(units::to_natural(1e20, 400.0, 30.0, 1e-8).pulse_energy_nat ==
          doctest::Approx(base.pulse_energy_nat).epsilon(1e-14));
  }

  TEST_CASE("round trip to 12 significant digits") {
    for (double i : {1e16, 3.3e19, 1e22}) {
      for (double nm : {266.0, 800.0, 10600.0}) {
        for (double fs : {3.0, 30.0, 1000.0}) {
          const double spot = 2.5e-7;
          const auto p = units::to_natural(i, nm, fs, spot);
          const auto lab = units::to_laboratory(p.omega0, p.tau_nat, p.pulse_energy_nat, spot);
          CHECK(lab.intensity == doctest::Approx(i).epsilon(1e-12));
          CHECK(lab.wavelength == doctest::Approx(nm).epsilon(1e-12));
          CHECK(lab.duration == doctest::Approx(fs).epsilon(1e-12));
          CHECK(lab.spot_area == doctest::Approx(spot).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("non-positive inputs name the field") {
    auto message = [](auto&& f) {
      try {
        f();
      } catch (const DomainError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message([] { units::to_natural(0.0, 800, 30, 1e-8); }).find("intensity") !=
          std::string::npos);
    CHECK(message([] { units::to_natural(1e22, -1, 30, 1e-8); }).find("wavelength") !=
          std::string::npos);
    CHECK(message([] { units::to_natural(1e22, 800, 0, 1e-8); }).find("duration") !=
          std::string::npos);
    CHECK(message([] { units::to_natural(1e22, 800, 30, 0); }).find("spot") !=
          std::string::npos);
    CHECK_THROWS_AS(units::to_natural(std::nan(""), 800, 30, 1e-8), DomainError);
  }
}
