#include "smode/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "smode/errors.hpp"

namespace smode::fock {
namespace {

void check_truncation(const SqueezeParams& sp, int dimension) {
  if (dimension < 16) {
    throw TruncationError("Fock dimension must be at least 16, got " +
                          std::to_string(dimension));
  }
  if (!(std::abs(sp.alpha) <= std::sqrt(static_cast<double>(dimension)) / 4.0)) {
    throw TruncationError("|alpha| exceeds sqrt(D)/4 for D = " + std::to_string(dimension));
  }
  if (!(std::abs(sp.eta) <= std::log(static_cast<double>(dimension)) / 8.0)) {
    throw TruncationError("|eta| exceeds ln(D)/8 for D = " + std::to_string(dimension));
  }
  if (sp.n0 < 0) {
    throw TruncationError("n0 must be non-negative");
  }
}

double low_block_max(const Matrix& m, int block) {
  const Eigen::Index size = block > 0 ? std::min<Eigen::Index>(block, m.rows()) : m.rows() / 8;
  return m.topLeftCorner(size, size).cwiseAbs().maxCoeff();
}

double expectation(const Matrix& op, int n0) { return op(n0, n0).real(); }

}  // namespace

double SqueezeParams::kappa() const { return std::exp(2.0 * eta); }

double SqueezeParams::beta() const {
  const double r = std::sqrt(kappa());
  const double d = r - 1.0 / r;
  return alpha * alpha + d * d / 4.0;
}

double kappa_from_cosh(double eta) {
  // sqrt(kappa) solves x + 1/x = 2 cosh(eta); take the root on the side of sign(eta).
  const double c = std::cosh(eta);
  const double root = c + std::sqrt(c * c - 1.0);
  const double r = eta >= 0.0 ? root : 1.0 / root;
  return r * r;
}

TruncatedOperator annihilation(int dimension) {
  if (dimension < 1) {
    throw TruncationError("Fock dimension must be positive");
  }
  Matrix a = Matrix::Zero(dimension, dimension);
  for (int n = 1; n < dimension; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return {dimension, a};
}

TruncatedOperator build_S(const SqueezeParams& sp, int dimension) {
  check_truncation(sp, dimension);
  const Matrix a = annihilation(dimension).matrix;
  const Matrix ad = a.adjoint();
  const Matrix displacement_gen = sp.alpha * (ad - a);
  const Matrix squeeze_gen = -0.5 * sp.eta * (a * a - ad * ad);
  const Matrix s = displacement_gen.exp() * squeeze_gen.exp();
  return {dimension, s};
}

double verify_transformation_law(const SqueezeParams& sp, int dimension, int block) {
  const Matrix s = build_S(sp, dimension).matrix;
  const Matrix a = annihilation(dimension).matrix;
  const double r = std::sqrt(sp.kappa());
  const double c = 0.5 * (r + 1.0 / r);
  const double sh = 0.5 * (r - 1.0 / r);
  const Matrix expected = c * a + sh * Matrix(a.adjoint()) +
                          sp.alpha * Matrix::Identity(dimension, dimension);
  return low_block_max(s.adjoint() * a * s - expected, block);
}

double unitarity_defect(const SqueezeParams& sp, int dimension, int block) {
  const Matrix s = build_S(sp, dimension).matrix;
  return low_block_max(s.adjoint() * s - Matrix::Identity(dimension, dimension), block);
}

Moments moments(const SqueezeParams& sp, int dimension) {
  if (4 * sp.n0 >= dimension) {
    throw TruncationError("n0 must be below D/4");
  }
  const Matrix s = build_S(sp, dimension).matrix;
  const Matrix a = annihilation(dimension).matrix;
  const Matrix ad = a.adjoint();
  const Matrix x = a + ad;
  const Matrix number = ad * a;
  const Matrix sd = s.adjoint();

  Moments m;
  m.m1 = expectation(sd * x * s, sp.n0);
  m.m2 = expectation(sd * (x * x) * s, sp.n0);
  m.m3 = expectation(sd * (x * x * x) * s, sp.n0);
  m.n_op = expectation(sd * number * s, sp.n0);
  m.mixed1 = expectation(sd * (x * number) * s, sp.n0);
  m.mixed1_reversed = expectation(sd * (number * x) * s, sp.n0);
  m.mixed2 = expectation(sd * (x * number * x) * s, sp.n0);
  return m;
}

Moments expected_moments(const SqueezeParams& sp) {
  const double k = sp.kappa();
  const double al = sp.alpha;
  const double b = sp.beta();
  const double n = sp.n0;
  const double occ = 2.0 * n + 1.0;

  Moments m;
  m.m1 = 2.0 * al;
  m.m2 = k * occ + 4.0 * al * al;
  m.m3 = 6.0 * al * k * occ + 8.0 * al * al * al;
  m.n_op = 0.5 * n * (k + 1.0 / k) + b;
  m.mixed1 = al * k * occ + al * (k + 1.0 / k) * n + 2.0 * al * b;
  m.mixed1_reversed = m.mixed1;
  m.mixed2 = 0.5 * k * (k + 1.0 / k) * (2.0 * n * n + n + 1.0) +
             0.25 * k * (k - 1.0 / k) * (2.0 * n * n + 2.0 * n) +
             (b * k + 4.0 * al * al * k) * occ + 2.0 * al * al * (k + 1.0 / k) * n +
             4.0 * al * al * b;
  return m;
}

double mixed2_alpha_linear(const SqueezeParams& sp) {
  const double k = sp.kappa();
  return expected_moments(sp).mixed2 +
         4.0 * k * (sp.alpha - sp.alpha * sp.alpha) * (2.0 * sp.n0 + 1.0);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t l = std::lcm(a.den, b.den);
  return make_rational(a.num * (l / a.den) + b.num * (l / b.den), l);
}

Rational operator*(const Rational& a, const Rational& b) {
  const Rational x = make_rational(a.num, b.den);
  const Rational y = make_rational(b.num, a.den);
  return make_rational(x.num * y.num, x.den * y.den);
}

Rational fluctuation_commutator(std::int64_t n_modes, std::int64_t k, std::int64_t k1) {
  if (n_modes < 2 || k < 0 || k1 < 0 || k >= n_modes || k1 >= n_modes) {
    throw DomainError("fluctuation_commutator: need N >= 2 and 0 <= k, k1 < N");
  }
  // c_k = sum_l (delta_kl - 1/N) a_l, so [c_k, c_k1^+] = sum_l coef_k(l) coef_k1(l).
  const Rational inv{-1, n_modes};
  auto coef = [&](std::int64_t owner, std::int64_t l) {
    return owner == l ? make_rational(n_modes - 1, n_modes) : inv;
  };
  Rational total{0, 1};
  for (std::int64_t l = 0; l < n_modes; ++l) {
    total = total + coef(k, l) * coef(k1, l);
  }
  return total;
}

Rational commutator_column_sum(std::int64_t n_modes, std::int64_t k1) {
  Rational total{0, 1};
  for (std::int64_t k = 0; k < n_modes; ++k) {
    total = total + fluctuation_commutator(n_modes, k, k1);
  }
  return total;
}

}  // namespace smode::fock
