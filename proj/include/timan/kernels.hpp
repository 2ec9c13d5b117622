// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>

namespace timan::kernels {

// Data-parallel inner loops shared by the spectral, series, and solver code.
// Each operation has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at startup from CPU
// features; the environment variable TIMAN_KERNELS=scalar|avx2|neon|auto
// or set_backend() overrides the choice. SIMD variants are equivalence-tested
// against the scalar reference (bit-exact is not required: FMA contraction
// and reduction order may differ by a few ulp).

enum class Backend { scalar, avx2, neon };

struct Table {
  // dst[i] = a * x[i]
  void (*scale)(double* dst, const double* x, double a, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double* y, const double* x, double a, std::size_t n);
  // dst[i] = x[i] * y[i]
  void (*mul)(double* dst, const double* x, const double* y, std::size_t n);
  // Interleaved complex scaled by a real multiplier:
  // c[2i] *= m[i]; c[2i+1] *= m[i]   for i in [0, n)
  void (*mul_real_pairs)(double* c, const double* m, std::size_t n);
  // Compensated accumulation: per element, sum[i] += a * x[i] with a
  // Kahan correction carried in comp[i].
  void (*kahan_axpy)(double* sum, double* comp, const double* x, double a, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  double (*sum_sq)(const double* x, std::size_t n);
};

bool backend_supported(Backend b);
Backend active_backend();
void set_backend(Backend b);  // throws EnvelopeError if unsupported on this host
const Table& table_for(Backend b);
const Table& dispatch();
std::string backend_name(Backend b);

inline void scale(double* dst, const double* x, double a, std::size_t n) {
  dispatch().scale(dst, x, a, n);
}
inline void axpy(double* y, const double* x, double a, std::size_t n) {
  dispatch().axpy(y, x, a, n);
}
inline void mul(double* dst, const double* x, const double* y, std::size_t n) {
  dispatch().mul(dst, x, y, n);
}
inline void mul_real_pairs(double* c, const double* m, std::size_t n) {
  dispatch().mul_real_pairs(c, m, n);
}
inline void kahan_axpy(double* sum, double* comp, const double* x, double a, std::size_t n) {
  dispatch().kahan_axpy(sum, comp, x, a, n);
}
inline double max_abs(const double* x, std::size_t n) { return dispatch().max_abs(x, n); }
inline double sum_sq(const double* x, std::size_t n) { return dispatch().sum_sq(x, n); }

}  // namespace timan::kernels
