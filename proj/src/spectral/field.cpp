// SPDX-License-Identifier: Apache-2.0

#include "timan/field.hpp"

#include <cmath>
#include <string>

#include "timan/errors.hpp"
#include "timan/kernels.hpp"

namespace timan {

namespace {
void check_components(const Grid& g, int components) {
  if (components != 1 && components != g.dim) {
    throw ShapeError("field components must be 1 or dim, got " + std::to_string(components));
  }
}
}  // namespace

RealField::RealField(Grid grid, int components)
    : grid_(grid), components_(components), values_(grid.num_nodes() * components, 0.0) {
  check_components(grid, components);
}

RealField RealField::sample(Grid grid, int components,
                            const std::function<double(const std::array<double, 3>&, int)>& f) {
  RealField out(grid, components);
  const std::size_t nn = out.nodes();
  for (int c = 0; c < components; ++c) {
    auto vals = out.comp(c);
    for (std::size_t i = 0; i < nn; ++i) vals[i] = f(grid.coords(i), c);
  }
  return out;
}

std::span<double> RealField::comp(int c) { return {values_.data() + c * nodes(), nodes()}; }
std::span<const double> RealField::comp(int c) const {
  return {values_.data() + c * nodes(), nodes()};
}

double RealField::max_abs() const { return kernels::max_abs(values_.data(), values_.size()); }

double RealField::l2() const {
  double hd = 1.0;
  for (int a = 0; a < grid_.dim; ++a) hd *= grid_.spacing();
  return std::sqrt(hd * kernels::sum_sq(values_.data(), values_.size()));
}

bool RealField::all_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

SpectralField::SpectralField(Grid grid, int components)
    : grid_(grid), components_(components), coeffs_(grid.num_nodes() * components) {
  check_components(grid, components);
}

std::span<std::complex<double>> SpectralField::comp(int c) {
  return {coeffs_.data() + c * nodes(), nodes()};
}
std::span<const std::complex<double>> SpectralField::comp(int c) const {
  return {coeffs_.data() + c * nodes(), nodes()};
}

double SpectralField::l2() const {
  double ld = 1.0;
  for (int a = 0; a < grid_.dim; ++a) ld *= grid_.length;
  const double* raw = reinterpret_cast<const double*>(coeffs_.data());
  return std::sqrt(ld * kernels::sum_sq(raw, 2 * coeffs_.size()));
}

double SpectralField::max_conjugate_asymmetry() const {
  // Max |c(m) - conj(c(-m))| over all modes, all components.
  const std::size_t nn = nodes();
  const int n = grid_.n;
  double worst = 0.0;
  for (int c = 0; c < components_; ++c) {
    auto cs = comp(c);
    for (std::size_t i = 0; i < nn; ++i) {
      auto idx = grid_.axis_indices(i);
      std::size_t j = 0;
      for (int a = 0; a < grid_.dim; ++a) {
        const int rev = idx[a] == 0 ? 0 : n - idx[a];
        j = j * static_cast<std::size_t>(n) + static_cast<std::size_t>(rev);
      }
      worst = std::max(worst, std::abs(cs[i] - std::conj(cs[j])));
    }
  }
  return worst;
}

}  // namespace timan
