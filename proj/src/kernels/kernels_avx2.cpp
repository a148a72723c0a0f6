#include <immintrin.h>

#include <cstddef>

#include "smode/kernels.hpp"

namespace smode::kernels::avx2 {
namespace {

inline double hsum(__m256d v) {
  // (l0 + l1) + (l2 + l3), matching the scalar reference.
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

SumPair scaled_sums(std::span<const double> g, double scale) {
  const std::size_t n = g.size();
  const __m256d vscale = _mm256_set1_pd(scale);
  __m256d s = _mm256_setzero_pd();
  __m256d q = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_mul_pd(vscale, _mm256_loadu_pd(g.data() + i));
    s = _mm256_add_pd(s, v);
    q = _mm256_add_pd(q, _mm256_mul_pd(v, v));
  }
  double sum = hsum(s);
  double sum_sq = hsum(q);
  for (; i < n; ++i) {
    const double v = scale * g[i];
    sum += v;
    sum_sq += v * v;
  }
  return {sum, sum_sq};
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  __m256d s = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s = _mm256_add_pd(s, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i),
                                       _mm256_loadu_pd(b.data() + i)));
  }
  double sum = hsum(s);
  for (; i < n; ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

double weighted_square_affine(std::span<const double> w, std::span<const double> x,
                              double slope, double offset) {
  const std::size_t n = w.size() < x.size() ? w.size() : x.size();
  const __m256d vslope = _mm256_set1_pd(slope);
  const __m256d voffset = _mm256_set1_pd(offset);
  __m256d s = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_fmadd_pd(vslope, _mm256_loadu_pd(x.data() + i), voffset);
    s = _mm256_fmadd_pd(_mm256_loadu_pd(w.data() + i), _mm256_mul_pd(t, t), s);
  }
  double sum = hsum(s);
  for (; i < n; ++i) {
    const double t = slope * x[i] + offset;
    sum += w[i] * (t * t);
  }
  return sum;
}

}  // namespace smode::kernels::avx2
