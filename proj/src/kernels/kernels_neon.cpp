#include <arm_neon.h>

#include <cstddef>

#include "smode/kernels.hpp"

// Two float64x2 registers per step give the same four-lane layout as AVX2.

namespace smode::kernels::neon {
namespace {

inline double hsum(float64x2_t lo, float64x2_t hi) {
  return (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) +
         (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
}

}  // namespace

SumPair scaled_sums(std::span<const double> g, double scale) {
  const std::size_t n = g.size();
  const float64x2_t vscale = vdupq_n_f64(scale);
  float64x2_t s0 = vdupq_n_f64(0.0), s1 = vdupq_n_f64(0.0);
  float64x2_t q0 = vdupq_n_f64(0.0), q1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t v0 = vmulq_f64(vscale, vld1q_f64(g.data() + i));
    const float64x2_t v1 = vmulq_f64(vscale, vld1q_f64(g.data() + i + 2));
    s0 = vaddq_f64(s0, v0);
    s1 = vaddq_f64(s1, v1);
    q0 = vaddq_f64(q0, vmulq_f64(v0, v0));
    q1 = vaddq_f64(q1, vmulq_f64(v1, v1));
  }
  double sum = hsum(s0, s1);
  double sum_sq = hsum(q0, q1);
  for (; i < n; ++i) {
    const double v = scale * g[i];
    sum += v;
    sum_sq += v * v;
  }
  return {sum, sum_sq};
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  float64x2_t s0 = vdupq_n_f64(0.0), s1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 = vaddq_f64(s0, vmulq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i)));
    s1 = vaddq_f64(s1, vmulq_f64(vld1q_f64(a.data() + i + 2), vld1q_f64(b.data() + i + 2)));
  }
  double sum = hsum(s0, s1);
  for (; i < n; ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

double weighted_square_affine(std::span<const double> w, std::span<const double> x,
                              double slope, double offset) {
  const std::size_t n = w.size() < x.size() ? w.size() : x.size();
  const float64x2_t vslope = vdupq_n_f64(slope);
  const float64x2_t voffset = vdupq_n_f64(offset);
  float64x2_t s0 = vdupq_n_f64(0.0), s1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t t0 = vfmaq_f64(voffset, vslope, vld1q_f64(x.data() + i));
    const float64x2_t t1 = vfmaq_f64(voffset, vslope, vld1q_f64(x.data() + i + 2));
    s0 = vfmaq_f64(s0, vld1q_f64(w.data() + i), vmulq_f64(t0, t0));
    s1 = vfmaq_f64(s1, vld1q_f64(w.data() + i + 2), vmulq_f64(t1, t1));
  }
  double sum = hsum(s0, s1);
  for (; i < n; ++i) {
    const double t = slope * x[i] + offset;
    sum += w[i] * (t * t);
  }
  return sum;
}

}  // namespace smode::kernels::neon
