// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "timan/fft.hpp"
#include "timan/field.hpp"

namespace timan {

enum class Direction { forward, backward };

struct SemigroupOptions {
  // Backward guard: amplified spectral-tail contribution must stay below
  // tail_tol * (nodal max norm of the input).
  double tail_tol = 1e-8;
  bool override_guard = false;
};

// Spectral Laplacian: multiplies each mode by -|k|^2. Exact on band-limited data.
RealField laplacian(const RealField& f);

// Heat propagator e^{-t|k|^2} (forward) or e^{+t|k|^2} (backward), t >= 0.
// Backward throws BandLimitExceeded when the amplified tail (modes above the
// 2/3 band) would contribute more than tail_tol * max|f|, or when any
// amplified mode overflows double range.
RealField heat_semigroup(const RealField& f, double t, Direction dir, SemigroupOptions opts = {});

// Helmholtz (Leray) projection onto divergence-free fields, symbol
// I - k k^T / |k|^2 with the zero mode passed through. Requires a vector field.
RealField leray_project(const RealField& f);

// P(div(u (x) u)) with 2/3-rule dealiasing applied to the quadratic product.
RealField nonlinear_term(const RealField& u);

RealField divergence(const RealField& vec);  // scalar result
RealField gradient(const RealField& scalar);  // vector result
double max_divergence(const RealField& vec);

namespace spectral {

// Per-mode arrays in flat FFT index order.
std::vector<double> k_sq(const Grid& g);
// Wavenumber along one axis with the Nyquist mode zeroed (odd derivatives of
// real data have no consistent Nyquist derivative).
std::vector<double> k_axis(const Grid& g, int axis);
// 1.0 where max per-axis |m| satisfies 3|m| <= n, else 0.0.
std::vector<double> dealias_mask(const Grid& g);

void apply_real_multiplier(SpectralField& f, const std::vector<double>& m);
void laplacian_inplace(SpectralField& f);
// field_max_norm is the nodal max norm of the original field, used by the
// backward tail guard; pass a negative value to have it recomputed.
void semigroup_inplace(SpectralField& f, double t, Direction dir, SemigroupOptions opts = {},
                       double field_max_norm = -1.0);
void leray_inplace(SpectralField& f);
void dealias_inplace(SpectralField& f);
SpectralField nonlinear_term(const SpectralField& uhat);
SpectralField divergence(const SpectralField& vec);
double max_divergence(const SpectralField& vec);

}  // namespace spectral

}  // namespace timan
