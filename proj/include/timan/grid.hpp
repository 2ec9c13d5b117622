// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>

namespace timan {

// Uniform periodic box [0, L)^dim with n nodes per axis. n must be a power of
// two (n >= 4) so transforms stay simple and fast. Wavenumbers per axis are
// k = 2*pi*m/L with integer m in [-n/2, n/2).
struct Grid {
  int dim = 1;
  int n = 0;
  double length = 0.0;

  static Grid make(int dim, int n, double length);

  std::size_t num_nodes() const {
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
    return total;
  }
  double spacing() const { return length / n; }

  // Signed integer mode for a frequency index in [0, n).
  int mode_of(int freq_index) const { return freq_index < n / 2 ? freq_index : freq_index - n; }
  double wavenumber(int mode) const;

  // Row-major decomposition of a flat node index into per-axis indices.
  std::array<int, 3> axis_indices(std::size_t node) const;
  // Node coordinates in [0, L)^dim.
  std::array<double, 3> coords(std::size_t node) const;

  bool operator==(const Grid&) const = default;
};

}  // namespace timan
