// SPDX-License-Identifier: Apache-2.0

// AVX2 + FMA kernels, 4 doubles per vector. This translation unit is compiled
// with -mavx2 -mfma and must only be entered after a runtime CPU check.

#include "timan/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace timan::kernels {
namespace {

void scale_avx2(double* dst, const double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) dst[i] = a * x[i];
}

void axpy_avx2(double* y, const double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void mul_avx2(double* dst, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) dst[i] = x[i] * y[i];
}

void mul_real_pairs_avx2(double* c, const double* m, std::size_t n) {
  std::size_t i = 0;
  // Two complex numbers per vector; duplicate [m0, m1] into [m0, m0, m1, m1].
  for (; i + 2 <= n; i += 2) {
    __m256d mv = _mm256_castpd128_pd256(_mm_loadu_pd(m + i));
    mv = _mm256_permute4x64_pd(mv, 0x50);
    __m256d cv = _mm256_loadu_pd(c + 2 * i);
    _mm256_storeu_pd(c + 2 * i, _mm256_mul_pd(cv, mv));
  }
  for (; i < n; ++i) {
    c[2 * i] *= m[i];
    c[2 * i + 1] *= m[i];
  }
}

void kahan_axpy_avx2(double* sum, double* comp, const double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d sv = _mm256_loadu_pd(sum + i);
    __m256d cv = _mm256_loadu_pd(comp + i);
    __m256d yv = _mm256_sub_pd(_mm256_mul_pd(av, _mm256_loadu_pd(x + i)), cv);
    __m256d tv = _mm256_add_pd(sv, yv);
    _mm256_storeu_pd(comp + i, _mm256_sub_pd(_mm256_sub_pd(tv, sv), yv));
    _mm256_storeu_pd(sum + i, tv);
  }
  for (; i < n; ++i) {
    double y = a * x[i] - comp[i];
    double t = sum[i] + y;
    comp[i] = (t - sum[i]) - y;
    sum[i] = t;
  }
}

double max_abs_avx2(const double* x, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d mv = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    mv = _mm256_max_pd(mv, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, mv);
  double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double sum_sq_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

}  // namespace

const Table& avx2_table() {
  static const Table t{scale_avx2, axpy_avx2,       mul_avx2,    mul_real_pairs_avx2,
                       kahan_axpy_avx2, max_abs_avx2, sum_sq_avx2};
  return t;
}

}  // namespace timan::kernels

#endif  // x86_64
