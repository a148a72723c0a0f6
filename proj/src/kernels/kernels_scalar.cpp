#include <cstddef>

#include "smode/kernels.hpp"

// Reference kernels. Four interleaved accumulators mirror the lane layout of
// the vector variants so that all variants associate sums the same way.

namespace smode::kernels::scalar {

SumPair scaled_sums(std::span<const double> g, double scale) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  double q[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = g.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t lane = 0; lane < 4; ++lane) {
      const double v = scale * g[i + lane];
      s[lane] += v;
      q[lane] += v * v;
    }
  }
  double sum = (s[0] + s[1]) + (s[2] + s[3]);
  double sum_sq = (q[0] + q[1]) + (q[2] + q[3]);
  for (; i < n; ++i) {
    const double v = scale * g[i];
    sum += v;
    sum_sq += v * v;
  }
  return {sum, sum_sq};
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t lane = 0; lane < 4; ++lane) {
      s[lane] += a[i + lane] * b[i + lane];
    }
  }
  double sum = (s[0] + s[1]) + (s[2] + s[3]);
  for (; i < n; ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

double weighted_square_affine(std::span<const double> w, std::span<const double> x,
                              double slope, double offset) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = w.size() < x.size() ? w.size() : x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t lane = 0; lane < 4; ++lane) {
      const double t = slope * x[i + lane] + offset;
      s[lane] += w[i + lane] * (t * t);
    }
  }
  double sum = (s[0] + s[1]) + (s[2] + s[3]);
  for (; i < n; ++i) {
    const double t = slope * x[i] + offset;
    sum += w[i] * (t * t);
  }
  return sum;
}

}  // namespace smode::kernels::scalar
