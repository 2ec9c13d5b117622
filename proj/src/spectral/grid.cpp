// SPDX-License-Identifier: Apache-2.0

#include "timan/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "timan/errors.hpp"

namespace timan {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid Grid::make(int dim, int n, double length) {
  if (dim < 1 || dim > 3) throw ShapeError("grid dim must be 1, 2 or 3, got " + std::to_string(dim));
  if (n < 4 || !is_pow2(n)) {
    throw ShapeError("grid n must be a power of two >= 4, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) throw ShapeError("grid length must be positive");
  return Grid{dim, n, length};
}

double Grid::wavenumber(int mode) const { return 2.0 * std::numbers::pi * mode / length; }

std::array<int, 3> Grid::axis_indices(std::size_t node) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(node % static_cast<std::size_t>(n));
    node /= static_cast<std::size_t>(n);
  }
  return idx;
}

std::array<double, 3> Grid::coords(std::size_t node) const {
  const auto idx = axis_indices(node);
  std::array<double, 3> x{0.0, 0.0, 0.0};
  const double h = spacing();
  for (int a = 0; a < dim; ++a) x[a] = h * idx[a];
  return x;
}

}  // namespace timan
