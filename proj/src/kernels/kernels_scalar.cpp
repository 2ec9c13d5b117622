// SPDX-License-Identifier: Apache-2.0

// Scalar reference kernels. These define the semantics the SIMD variants are
// tested against.

#include <cmath>
#include <cstddef>

#include "timan/kernels.hpp"

namespace timan::kernels {
namespace {

void scale_scalar(double* dst, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a * x[i];
}

void axpy_scalar(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void mul_scalar(double* dst, const double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] * y[i];
}

void mul_real_pairs_scalar(double* c, const double* m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    c[2 * i] *= m[i];
    c[2 * i + 1] *= m[i];
  }
}

void kahan_axpy_scalar(double* sum, double* comp, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double y = a * x[i] - comp[i];
    double t = sum[i] + y;
    comp[i] = (t - sum[i]) - y;
    sum[i] = t;
  }
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double sum_sq_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

}  // namespace

const Table& scalar_table() {
  static const Table t{scale_scalar, axpy_scalar,       mul_scalar,    mul_real_pairs_scalar,
                       kahan_axpy_scalar, max_abs_scalar, sum_sq_scalar};
  return t;
}

}  // namespace timan::kernels
