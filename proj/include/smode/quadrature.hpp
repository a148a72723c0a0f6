#pragma once

#include <functional>
#include <vector>

namespace smode::quadrature {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n). Cached per n.
const GaussRule& gauss_legendre(int n);

/// Rule mapped onto [a, b].
GaussRule gauss_legendre(int n, double a, double b);

template <class T>
struct QuadratureResult {
  T value{};
  double estimated_error = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Adaptive bisection with a 16-point vs two-half 16-point comparison.
QuadratureResult<double> integrate(const std::function<double(double)>& f, double a,
                                   double b, double rel_tol = 1e-12);

/// Principal value of integral_a^b g(x) dx where g has a simple pole at `pole`.
/// Inside (a, b) the pole is excised symmetrically and the two sides are
/// paired, integral_0^r [g(pole + t) + g(pole - t)] dt, so the singular parts
/// cancel node by node; the leftover one-sided piece is a regular integral.
/// A pole outside [a, b] gives the ordinary integral. Throws DomainError if
/// the pole sits on an endpoint.
double pv_regularize(const std::function<double(double)>& g, double pole, double a, double b,
                     double rel_tol = 1e-12);

}  // namespace smode::quadrature
