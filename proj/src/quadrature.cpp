#include "smode/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "smode/errors.hpp"

namespace smode::quadrature {
namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

double gauss16(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& rule = gauss_legendre(16);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

constexpr long kEvaluationBudget = 4'000'000;

void adapt(const std::function<double(double)>& f, double a, double b, double whole,
           double abs_tol, int depth, QuadratureResult<double>& out) {
  const double mid = 0.5 * (a + b);
  const double left = gauss16(f, a, mid);
  const double right = gauss16(f, mid, b);
  out.evaluations += 32;
  const double diff = std::abs(left + right - whole);
  // below this the estimate is rounding noise and cannot improve
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(left + right);
  abs_tol = std::max(abs_tol, floor);
  if (diff <= abs_tol || depth >= 40 || out.evaluations > kEvaluationBudget) {
    out.value += left + right;
    out.estimated_error += diff;
    if (diff > abs_tol) {
      out.converged = false;
    }
    return;
  }
  adapt(f, a, mid, left, 0.5 * abs_tol, depth + 1, out);
  adapt(f, mid, b, right, 0.5 * abs_tol, depth + 1, out);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) {
    throw DomainError("gauss_legendre: order must be >= 1");
  }
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, compute_rule(n)).first;
  }
  return it->second;
}

GaussRule gauss_legendre(int n, double a, double b) {
  GaussRule mapped = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < mapped.nodes.size(); ++i) {
    mapped.nodes[i] = mid + half * mapped.nodes[i];
    mapped.weights[i] *= half;
  }
  return mapped;
}

QuadratureResult<double> integrate(const std::function<double(double)>& f, double a,
                                   double b, double rel_tol) {
  QuadratureResult<double> out;
  out.converged = true;
  if (a == b) {
    return out;
  }
  const double whole = gauss16(f, a, b);
  out.evaluations = 16;
  const double magnitude = gauss16([&f](double x) { return std::abs(f(x)); }, a, b);
  out.evaluations += 16;
  const double scale = std::max(std::abs(whole), magnitude);
  adapt(f, a, b, whole, rel_tol * scale, 0, out);
  return out;
}

double pv_regularize(const std::function<double(double)>& g, double pole, double a, double b,
                     double rel_tol) {
  if (!(a < b)) {
    throw DomainError("pv_regularize: require a < b");
  }
  if (pole == a || pole == b) {
    throw DomainError("pv_regularize: pole on the integration boundary");
  }
  if (pole < a || pole > b) {
    return integrate(g, a, b, rel_tol).value;
  }
  const double reach = std::min(pole - a, b - pole);
  double outer = 0.0;
  if (pole - a > reach) {
    outer = integrate(g, a, pole - reach, rel_tol).value;
  } else if (b - pole > reach) {
    outer = integrate(g, pole + reach, b, rel_tol).value;
  }
  // Offsets snapped to the grid of pole so both points mirror closely and the
  // singular parts cancel instead of leaving rounding noise near t = 0.
  auto paired = [&g, pole](double t) {
    const double d = (pole + t) - pole;
    return g(pole + d) + g(pole - d);
  };
  // The paired integrand may cancel to rounding level, so its tolerance is
  // set by the strength of the pole rather than by its own magnitude.
  const double strength =
      0.5 * reach * (std::abs(g(pole + reach)) + std::abs(g(pole - reach)));
  QuadratureResult<double> inner;
  inner.converged = true;
  const double whole = gauss16(paired, 0.0, reach);
  adapt(paired, 0.0, reach, whole, rel_tol * std::max(strength, std::abs(outer)), 0, inner);
  const double value = inner.value + outer;
  return value;
}

}  // namespace smode::quadrature
