#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "smode/errors.hpp"
#include "smode/fock.hpp"

using namespace smode;

TEST_SUITE("fock") {
  TEST_CASE("annihilation operator") {
    const auto a = fock::annihilation(16).matrix;
    CHECK(a(0, 1).real() == 1.0);
    CHECK(a(2, 3).real() == doctest::Approx(std::sqrt(3.0)));
    const fock::Matrix comm = a * a.adjoint() - a.adjoint() * a;
    for (int n = 0; n < 15; ++n) {
      CHECK(comm(n, n).real() == doctest::Approx(1.0));
    }
    CHECK(comm(15, 15).real() == doctest::Approx(-15.0));
  }

  TEST_CASE("identity and displacement") {
    const auto s = fock::build_S({0.0, 0.0, 0}, 32).matrix;
    CHECK((s - fock::Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() <= 1e-15);
    const auto d = fock::build_S({0.5, 0.0, 0}, 64).matrix;
    const auto a = fock::annihilation(64).matrix;
    const fock::Matrix t = d.adjoint() * a * d;
    CHECK(t(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("transformation law") {
    CHECK(fock::verify_transformation_law({0.0, 0.0, 0}, 32) <= 1e-15);
    CHECK(fock::verify_transformation_law({0.0, 0.3, 0}, 64) <= 1e-8);
    CHECK(fock::verify_transformation_law({0.5, 0.3, 0}, 128) <= 1e-8);
    CHECK(fock::unitarity_defect({1.0, 0.5, 0}, 128) <= 1e-8);
    // fixed block, growing dimension
    double previous = INFINITY;
    for (int d : {32, 64, 128}) {
      const double dev = fock::verify_transformation_law({1.0, 0.3, 0}, d, 4);
      CHECK(dev <= std::max(1.1 * previous, 1e-13));
      previous = dev;
    }
  }

  TEST_CASE("moment identities on the grid") {
    for (double alpha : {0.0, 0.3, 1.0}) {
      for (double eta : {0.0, 0.2, 0.5}) {
        for (int n0 : {0, 1, 5}) {
          CAPTURE(alpha);
          CAPTURE(eta);
          CAPTURE(n0);
          const fock::SqueezeParams sp{alpha, eta, n0};
          const auto m = fock::moments(sp, 128);
          const auto x = fock::expected_moments(sp);
          CHECK(std::abs(m.m1 - x.m1) <= 1e-8);
          CHECK(std::abs(m.m2 - x.m2) <= 1e-8);
          CHECK(std::abs(m.m3 - x.m3) <= 1e-8);
          CHECK(std::abs(m.n_op - x.n_op) <= 1e-8);
          CHECK(std::abs(m.mixed1 - x.mixed1) <= 1e-8);
          CHECK(std::abs(m.mixed1_reversed - x.mixed1) <= 1e-8);
          CHECK(std::abs(m.mixed2 - x.mixed2) <= 1e-8);
        }
      }
    }
  }

  TEST_CASE("alpha-linear sixth moment is rejected") {
    const fock::SqueezeParams sp{0.3, 0.0, 0};
    const auto m = fock::moments(sp, 128);
    CHECK(m.mixed2 - fock::mixed2_alpha_linear(sp) == doctest::Approx(-0.84).epsilon(1e-9));
  }

  TEST_CASE("kappa forms agree") {
    for (double eta : {-0.4, 0.0, 0.2, 0.5}) {
      CHECK(fock::SqueezeParams{0.0, eta, 0}.kappa() ==
            doctest::Approx(fock::kappa_from_cosh(eta)).epsilon(1e-12));
    }
  }

  TEST_CASE("truncation bounds") {
    CHECK_THROWS_AS(fock::build_S({0.1, 0.1, 0}, 8), TruncationError);
    CHECK_THROWS_AS(fock::build_S({3.0, 0.0, 0}, 64), TruncationError);
    CHECK_THROWS_AS(fock::build_S({0.0, 0.7, 0}, 64), TruncationError);
    CHECK_THROWS_AS(fock::moments({0.0, 0.0, 16}, 64), TruncationError);
  }

  TEST_CASE("fluctuation commutator") {
    CHECK(fock::fluctuation_commutator(2, 0, 0) == fock::Rational{1, 2});
    CHECK(fock::fluctuation_commutator(2, 0, 1) == fock::Rational{-1, 2});
    CHECK(fock::fluctuation_commutator(7, 3, 3) == fock::Rational{6, 7});
    CHECK(fock::fluctuation_commutator(100000, 5, 5).value() == doctest::Approx(1.0).epsilon(1e-4));
    for (std::int64_t k1 = 0; k1 < 9; ++k1) {
      CHECK(fock::commutator_column_sum(9, k1) == fock::Rational{0, 1});
    }
    CHECK_THROWS_AS(fock::fluctuation_commutator(1, 0, 0), DomainError);
    CHECK_THROWS_AS(fock::fluctuation_commutator(4, 4, 0), DomainError);
  }
}
