#pragma once

#include <functional>

namespace smode::specfun {

/// Error function, 2/sqrt(pi) * integral_0^z exp(-t^2) dt.
///
/// Evaluated in-house (series below |z| = 2.5, continued fraction above) so
/// the result does not depend on the platform libm's erf. Absolute error is
/// below 1e-14 on |z| <= 6; infinities map to +-1.
double phi(double z);

/// Complementary error function 1 - phi(z), accurate in relative terms for
/// large positive z where 1 - phi(z) would cancel.
double phi_complement(double z);

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // f(root)
  int iterations = 0;
};

inline constexpr double kDefaultRootTolerance = 1e-10;

/// Bracketing root solver: bisection down to a bracket of width <= tol, then
/// a secant/Newton polish that is only accepted when it stays inside the
/// bracket and lowers |f|. Deterministic, and invariant under f -> -f.
///
/// Throws BracketError if f(lo) and f(hi) share a sign, EvaluationError if f
/// returns a non-finite value, DomainError for a non-positive tolerance or an
/// empty bracket, ConvergenceError if |f(root)| <= tol cannot be reached.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double tol = kDefaultRootTolerance);

}  // namespace smode::specfun
