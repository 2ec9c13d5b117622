// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "timan/grid.hpp"

namespace timan {

// Nodal values of a scalar (components == 1) or vector (components == dim)
// field. Storage is component-major: component c occupies one contiguous
// row-major block of grid.num_nodes() doubles.
class RealField {
 public:
  RealField() = default;
  RealField(Grid grid, int components);

  static RealField zeros(Grid grid, int components) { return RealField(grid, components); }
  // Sample a callable (coords, component) -> value at every node.
  static RealField sample(Grid grid, int components,
                          const std::function<double(const std::array<double, 3>&, int)>& f);

  const Grid& grid() const { return grid_; }
  int components() const { return components_; }
  std::size_t nodes() const { return grid_.num_nodes(); }

  std::span<double> comp(int c);
  std::span<const double> comp(int c) const;
  double& at(int c, std::size_t node) { return values_[c * nodes() + node]; }
  double at(int c, std::size_t node) const { return values_[c * nodes() + node]; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  double max_abs() const;
  // Nodal L2 norm sqrt(h^dim * sum v^2); matches the spectral norm by Parseval.
  double l2() const;
  bool all_finite() const;

 private:
  Grid grid_;
  int components_ = 0;
  std::vector<double> values_;
};

// Fourier coefficients of a RealField, full complex spectrum in FFT index
// order per axis (frequencies 0..n/2-1, -n/2..-1). Coefficients of a real
// field satisfy conjugate symmetry c(-m) = conj(c(m)).
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(Grid grid, int components);

  static SpectralField zeros(Grid grid, int components) { return SpectralField(grid, components); }

  const Grid& grid() const { return grid_; }
  int components() const { return components_; }
  std::size_t nodes() const { return grid_.num_nodes(); }

  std::span<std::complex<double>> comp(int c);
  std::span<const std::complex<double>> comp(int c) const;
  std::complex<double>& at(int c, std::size_t idx) { return coeffs_[c * nodes() + idx]; }
  const std::complex<double>& at(int c, std::size_t idx) const { return coeffs_[c * nodes() + idx]; }

  std::vector<std::complex<double>>& coeffs() { return coeffs_; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  // Spectral L2 norm sqrt(L^dim * sum |c|^2).
  double l2() const;
  double max_conjugate_asymmetry() const;

 private:
  Grid grid_;
  int components_ = 0;
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace timan
