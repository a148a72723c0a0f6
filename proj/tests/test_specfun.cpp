#include <cmath>

#include "doctest.h"
#include "smode/errors.hpp"
#include "smode/specfun.hpp"

using namespace smode;

TEST_SUITE("specfun") {
  // 30-digit reference values (mpmath).
  TEST_CASE("erf against frozen reference values") {
    struct Ref {
      double z, erf, erfc;
    };
    const Ref refs[] = {
        {0.1, 0.1124629160182848922, 0.8875370839817151078},
        {0.5, 0.52049987781304653768, 0.47950012218695346232},
        {1.0, 0.84270079294971486934, 0.15729920705028513066},
        {2.4999, 0.99959283009966654908, 0.0004071699003334509212},
        {2.5001, 0.9995932657565293198, 0.00040673424347068020004},
        {2.503, 0.99959953404860640619, 0.00040046595139359380952},
        {3.5, 0.99999925690162765859, 7.4309837234141274552e-7},
        {5.0, 0.99999999999846254021, 1.5374597944280348502e-12},
        {6.0, 0.99999999999999997848, 2.1519736712498913117e-17},
        {-1.3, -0.9340079449406524366, 1.9340079449406524366},
    };
    for (const auto& r : refs) {
      CAPTURE(r.z);
      CHECK(std::abs(specfun::phi(r.z) - r.erf) <= 1e-14);
      CHECK(specfun::phi_complement(r.z) == doctest::Approx(r.erfc).epsilon(1e-12));
    }
  }

  TEST_CASE("erf basic properties") {
    CHECK(specfun::phi(0.0) == 0.0);
    CHECK(std::abs(specfun::phi(6.0) - 1.0) <= 1e-15);
    CHECK(specfun::phi(INFINITY) == 1.0);
    CHECK(specfun::phi(-INFINITY) == -1.0);
    double previous = -1.0;
    for (int i = -600; i <= 600; ++i) {
      const double z = i / 100.0;
      CHECK(specfun::phi(-z) == -specfun::phi(z));
      CHECK(specfun::phi(z) >= previous);
      CHECK(std::abs(specfun::phi(z) - std::erf(z)) <= 1e-14);
      previous = specfun::phi(z);
    }
  }

  TEST_CASE("find_root on known roots") {
    CHECK(specfun::find_root([](double x) { return x - 1.0; }, 0.0, 2.0).root ==
          doctest::Approx(1.0).epsilon(1e-12));
    const auto r = specfun::find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0);
    CHECK(r.root == doctest::Approx(1.41421356237).epsilon(1e-10));
    CHECK(std::abs(r.residual) <= specfun::kDefaultRootTolerance);
  }

  TEST_CASE("find_root is invariant under f -> -f") {
    auto f = [](double x) { return std::cos(x) - x; };
    auto g = [&f](double x) { return -f(x); };
    const auto a = specfun::find_root(f, 0.0, 1.0, 1e-13);
    const auto b = specfun::find_root(g, 0.0, 1.0, 1e-13);
    CHECK(a.root == b.root);
    CHECK(a.iterations == b.iterations);
  }

  TEST_CASE("find_root errors") {
    CHECK_THROWS_AS(specfun::find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    BracketError);
    CHECK_THROWS_AS(specfun::find_root([](double x) { return x < 0.5 ? -1.0 : NAN; }, 0.0, 1.0),
                    EvaluationError);
    CHECK_THROWS_AS(specfun::find_root([](double x) { return x; }, -1.0, 1.0, 0.0),
                    DomainError);
    CHECK_THROWS_AS(specfun::find_root([](double x) { return x; }, 1.0, -1.0), DomainError);
  }
}
