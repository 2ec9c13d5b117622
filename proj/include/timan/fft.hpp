// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "timan/field.hpp"

namespace timan {

// Exact transform pair between nodal values and Fourier coefficients, using
// the convention f(x) = sum_m c(m) exp(i k_m . x). A constant field maps to a
// single DC coefficient equal to the constant.
SpectralField to_spectral(const RealField& f);
RealField to_nodal(const SpectralField& f);

namespace fft {
// Low-level c2c transforms on FFT-ordered arrays (row-major, n^dim entries).
// forward applies sum_j v_j exp(-2*pi*i*j*m/n) / n^dim, backward its inverse.
void forward(const Grid& g, const std::complex<double>* in, std::complex<double>* out);
void backward(const Grid& g, const std::complex<double>* in, std::complex<double>* out);
}  // namespace fft

}  // namespace timan
