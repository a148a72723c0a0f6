#pragma once

#include <cstdint>

#include <Eigen/Dense>

// Truncated number-basis checks of the collective-mode canonical transform
// S = exp(alpha (A^+ - A)) exp(-(eta/2)(A^2 - A^+2)).

namespace smode::fock {

inline constexpr int kDefaultDimension = 128;

struct SqueezeParams {
  double alpha = 0.0;
  double eta = 0.0;
  int n0 = 0;

  /// kappa = exp(2 eta).
  double kappa() const;
  /// alpha^2 + (sqrt(kappa) - 1/sqrt(kappa))^2 / 4.
  double beta() const;
};

/// Same kappa from cosh(eta) = (sqrt(kappa) + 1/sqrt(kappa))/2 with kappa >= 1
/// for eta >= 0 (kappa < 1 for eta < 0).
double kappa_from_cosh(double eta);

using Matrix = Eigen::MatrixXcd;

struct TruncatedOperator {
  int dimension = 0;
  Matrix matrix;
};

/// A[n-1, n] = sqrt(n).
TruncatedOperator annihilation(int dimension);

/// Throws TruncationError unless D >= 16, |alpha| <= sqrt(D)/4 and
/// |eta| <= ln(D)/8.
TruncatedOperator build_S(const SqueezeParams& sp, int dimension = kDefaultDimension);

/// Max |entry| of S^+ A S - [c A + s A^+ + alpha] over the n < block block
/// (default D/8), c, s = (sqrt(kappa) +- 1/sqrt(kappa))/2. Squeezed states
/// near n ~ D/2 reach the truncation edge, so larger blocks measure the
/// truncation rather than the identity.
double verify_transformation_law(const SqueezeParams& sp, int dimension = kDefaultDimension,
                                 int block = 0);

/// Max |entry| of S^+ S - I over the n < block block (default D/8).
double unitarity_defect(const SqueezeParams& sp, int dimension = kDefaultDimension,
                        int block = 0);

struct Moments {
  double m1 = 0.0;      // <n0|S^+ X S|n0>, X = A + A^+
  double m2 = 0.0;      // X^2
  double m3 = 0.0;      // X^3
  double n_op = 0.0;    // A^+ A
  double mixed1 = 0.0;  // X A^+ A
  double mixed1_reversed = 0.0;  // A^+ A X
  double mixed2 = 0.0;  // X A^+ A X
};

/// Expectation values by matrix products. Requires n0 < D/4 (TruncationError).
Moments moments(const SqueezeParams& sp, int dimension = kDefaultDimension);

/// Closed-form moments. mixed2 carries 4 alpha^2 kappa (2 n0 + 1), the form
/// the matrices satisfy.
Moments expected_moments(const SqueezeParams& sp);

/// mixed2 with 4 alpha kappa (2 n0 + 1) in place of 4 alpha^2 kappa (2 n0 + 1).
double mixed2_alpha_linear(const SqueezeParams& sp);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);
Rational operator+(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);

/// [c_k, c_k1^+] for c_k = a_k - (1/N) sum_l a_l, expanded with [a_l, a_m^+] =
/// delta_lm in exact rationals; equals delta_{k k1} - 1/N. Throws DomainError
/// unless N >= 2 and k, k1 < N.
Rational fluctuation_commutator(std::int64_t n_modes, std::int64_t k, std::int64_t k1);

/// sum_k [c_k, c_k1^+]; zero because sum_k c_k = 0.
Rational commutator_column_sum(std::int64_t n_modes, std::int64_t k1);

}  // namespace smode::fock
