#include "smode/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "smode/errors.hpp"

namespace smode::specfun {
namespace {

constexpr double kSeriesLimit = 2.5;
// Beyond this exp(-z^2) underflows and erfc is exactly zero in double.
constexpr double kUnderflowLimit = 27.3;
constexpr int kContinuedFractionDepth = 160;

// erf(z) = 2/sqrt(pi) exp(-z^2) sum_n (2 z^2)^n z / (1*3*...*(2n+1)), z >= 0.
// All terms are positive, so there is no cancellation.
double erf_series(double z) {
  const double two_z2 = 2.0 * z * z;
  double term = z;
  double sum = z;
  for (int n = 1; n < 200; ++n) {
    term *= two_z2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * 1e-17) {
      break;
    }
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-z * z) * sum;
}

// erfc(z) = exp(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))), z > 0,
// evaluated bottom-up at fixed depth.
double erfc_continued_fraction(double z) {
  double t = z;
  for (int k = kContinuedFractionDepth; k >= 1; --k) {
    t = z + 0.5 * k / t;
  }
  return std::exp(-z * z) / std::sqrt(std::numbers::pi) / t;
}

}  // namespace

double phi(double z) {
  if (std::isnan(z)) {
    return z;
  }
  if (z < 0.0) {
    return -phi(-z);
  }
  if (z < kSeriesLimit) {
    return erf_series(z);
  }
  if (z > kUnderflowLimit) {
    return 1.0;
  }
  return 1.0 - erfc_continued_fraction(z);
}

double phi_complement(double z) {
  if (std::isnan(z)) {
    return z;
  }
  if (z < 0.0) {
    return 2.0 - phi_complement(-z);
  }
  if (z < kSeriesLimit) {
    return 1.0 - erf_series(z);
  }
  if (z > kUnderflowLimit) {
    return 0.0;
  }
  return erfc_continued_fraction(z);
}

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("find_root: tolerance must be positive");
  }
  if (!(lo < hi)) {
    throw DomainError("find_root: bracket must satisfy lo < hi");
  }

  auto eval = [&f](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw EvaluationError("find_root: objective is not finite at x = " + std::to_string(x));
    }
    return y;
  };

  double f_lo = eval(lo);
  double f_hi = eval(hi);
  if (f_lo == 0.0) {
    return {lo, 0.0, 0};
  }
  if (f_hi == 0.0) {
    return {hi, 0.0, 0};
  }
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw BracketError("find_root: f(lo) and f(hi) have the same sign");
  }

  int iterations = 0;
  constexpr int kMaxIterations = 400;

  // Keeps the bracket and returns the midpoint value.
  auto bisect = [&]() {
    const double mid = lo + 0.5 * (hi - lo);
    const double f_mid = eval(mid);
    ++iterations;
    if (f_mid == 0.0) {
      lo = hi = mid;
      f_lo = f_hi = 0.0;
    } else if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  };

  while (hi - lo > tol && iterations < kMaxIterations) {
    bisect();
  }

  // Newton polish with the secant slope of the final bracket.
  double x = (std::abs(f_lo) <= std::abs(f_hi)) ? lo : hi;
  double fx = (x == lo) ? f_lo : f_hi;
  if (hi > lo) {
    const double mid = lo + 0.5 * (hi - lo);
    const double f_mid = eval(mid);
    ++iterations;
    if (std::abs(f_mid) < std::abs(fx)) {
      x = mid;
      fx = f_mid;
    }
    for (int k = 0; k < 4 && fx != 0.0; ++k) {
      const double slope = (f_hi - f_lo) / (hi - lo);
      if (slope == 0.0 || !std::isfinite(slope)) {
        break;
      }
      const double candidate = x - fx / slope;
      if (!(candidate >= lo && candidate <= hi)) {
        break;
      }
      const double f_candidate = eval(candidate);
      ++iterations;
      if (std::abs(f_candidate) >= std::abs(fx)) {
        break;
      }
      x = candidate;
      fx = f_candidate;
    }
  }

  // Steep objectives may need a narrower bracket than tol to meet |f| <= tol.
  while (std::abs(fx) > tol && iterations < kMaxIterations) {
    const double width = hi - lo;
    bisect();
    const double next = (std::abs(f_lo) <= std::abs(f_hi)) ? lo : hi;
    const double f_next = (next == lo) ? f_lo : f_hi;
    if (std::abs(f_next) < std::abs(fx)) {
      x = next;
      fx = f_next;
    }
    if (hi - lo >= width) {
      break;
    }
  }

  if (std::abs(fx) > tol) {
    throw ConvergenceError("find_root: |f| = " + std::to_string(std::abs(fx)) +
                           " above tolerance after bracket collapsed");
  }
  return {x, fx, iterations};
}

}  // namespace smode::specfun
