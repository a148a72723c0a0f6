#pragma once

#include <cmath>
#include <span>

// Data-parallel inner loops of the lattice sums and tensor-product
// quadratures. Each kernel has a scalar reference implementation and, where
// the target supports it, an AVX2 (x86-64) or NEON (AArch64) variant chosen
// at runtime. Variants agree with the scalar reference to ~1e-14 relative.

namespace smode::kernels {

enum class Isa { scalar, avx2, neon };

const char* to_string(Isa isa);

/// Best instruction set compiled in and supported by this CPU.
Isa detect_isa();
/// ISA currently used by the dispatching entry points.
Isa active_isa();
/// Overrides dispatch (tests, benchmarks). Returns false, leaving dispatch
/// unchanged, if `isa` is not available on this build/CPU.
bool force_isa(Isa isa);
bool isa_available(Isa isa);

struct SumPair {
  double sum = 0.0;     // sum_i scale * g[i]
  double sum_sq = 0.0;  // sum_i (scale * g[i])^2
};

SumPair scaled_sums(std::span<const double> g, double scale);
double dot(std::span<const double> a, std::span<const double> b);
/// sum_i w[i] * (slope * x[i] + offset)^2
double weighted_square_affine(std::span<const double> w, std::span<const double> x,
                              double slope, double offset);

namespace scalar {
SumPair scaled_sums(std::span<const double> g, double scale);
double dot(std::span<const double> a, std::span<const double> b);
double weighted_square_affine(std::span<const double> w, std::span<const double> x,
                              double slope, double offset);
}  // namespace scalar

namespace avx2 {
SumPair scaled_sums(std::span<const double> g, double scale);
double dot(std::span<const double> a, std::span<const double> b);
double weighted_square_affine(std::span<const double> w, std::span<const double> x,
                              double slope, double offset);
}  // namespace avx2

namespace neon {
SumPair scaled_sums(std::span<const double> g, double scale);
double dot(std::span<const double> a, std::span<const double> b);
double weighted_square_affine(std::span<const double> w, std::span<const double> x,
                              double slope, double offset);
}  // namespace neon

/// Neumaier-compensated accumulator for combining kernel partial sums.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace smode::kernels
