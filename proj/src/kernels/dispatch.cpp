#include <atomic>

#include "smode/kernels.hpp"

namespace smode::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(SMODE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect_isa()};
  return isa;
}

}  // namespace

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
    case Isa::neon:
#if defined(SMODE_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  if (isa_available(Isa::avx2)) {
    return Isa::avx2;
  }
  if (isa_available(Isa::neon)) {
    return Isa::neon;
  }
  return Isa::scalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool force_isa(Isa isa) {
  if (!isa_available(isa)) {
    return false;
  }
  current().store(isa, std::memory_order_relaxed);
  return true;
}

#if defined(SMODE_HAVE_AVX2)
#define SMODE_AVX2_CASE(call) \
  case Isa::avx2:             \
    return avx2::call;
#else
#define SMODE_AVX2_CASE(call)
#endif

#if defined(SMODE_HAVE_NEON)
#define SMODE_NEON_CASE(call) \
  case Isa::neon:             \
    return neon::call;
#else
#define SMODE_NEON_CASE(call)
#endif

SumPair scaled_sums(std::span<const double> g, double scale) {
  switch (active_isa()) {
    SMODE_AVX2_CASE(scaled_sums(g, scale))
    SMODE_NEON_CASE(scaled_sums(g, scale))
    default:
      return scalar::scaled_sums(g, scale);
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  switch (active_isa()) {
    SMODE_AVX2_CASE(dot(a, b))
    SMODE_NEON_CASE(dot(a, b))
    default:
      return scalar::dot(a, b);
  }
}

double weighted_square_affine(std::span<const double> w, std::span<const double> x,
                              double slope, double offset) {
  switch (active_isa()) {
    SMODE_AVX2_CASE(weighted_square_affine(w, x, slope, offset))
    SMODE_NEON_CASE(weighted_square_affine(w, x, slope, offset))
    default:
      return scalar::weighted_square_affine(w, x, slope, offset);
  }
}

}  // namespace smode::kernels
