// SPDX-License-Identifier: Apache-2.0

// NEON kernels for aarch64, 2 doubles per vector.

#include "timan/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace timan::kernels {
namespace {

void scale_neon(double* dst, const double* x, double a, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vmulq_f64(av, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) dst[i] = a * x[i];
}

void axpy_neon(double* y, const double* x, double a, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void mul_neon(double* dst, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  }
  for (; i < n; ++i) dst[i] = x[i] * y[i];
}

void mul_real_pairs_neon(double* c, const double* m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t mv = vdupq_n_f64(m[i]);
    vst1q_f64(c + 2 * i, vmulq_f64(vld1q_f64(c + 2 * i), mv));
  }
}

void kahan_axpy_neon(double* sum, double* comp, const double* x, double a, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t sv = vld1q_f64(sum + i);
    float64x2_t cv = vld1q_f64(comp + i);
    float64x2_t yv = vsubq_f64(vmulq_f64(av, vld1q_f64(x + i)), cv);
    float64x2_t tv = vaddq_f64(sv, yv);
    vst1q_f64(comp + i, vsubq_f64(vsubq_f64(tv, sv), yv));
    vst1q_f64(sum + i, tv);
  }
  for (; i < n; ++i) {
    double y = a * x[i] - comp[i];
    double t = sum[i] + y;
    comp[i] = (t - sum[i]) - y;
    sum[i] = t;
  }
}

double max_abs_neon(const double* x, std::size_t n) {
  float64x2_t mv = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    mv = vmaxq_f64(mv, vabsq_f64(vld1q_f64(x + i)));
  }
  double m = std::max(vgetq_lane_f64(mv, 0), vgetq_lane_f64(mv, 1));
  for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double sum_sq_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xv = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, xv, xv);
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

}  // namespace

const Table& neon_table() {
  static const Table t{scale_neon, axpy_neon,       mul_neon,    mul_real_pairs_neon,
                       kahan_axpy_neon, max_abs_neon, sum_sq_neon};
  return t;
}

}  // namespace timan::kernels

#endif  // aarch64
