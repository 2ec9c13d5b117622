// SPDX-License-Identifier: Apache-2.0

#include "timan/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "timan/errors.hpp"
#include "timan/kernels.hpp"

namespace timan {
namespace spectral {

namespace {
constexpr double kExpOverflow = 700.0;  // ln(DBL_MAX) with margin

void check_finite(const RealField& f, const char* op) {
  if (!f.all_finite()) throw InternalError(std::string(op) + ": produced non-finite values");
}
}  // namespace

std::vector<double> k_sq(const Grid& g) {
  std::vector<double> out(g.num_nodes());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto idx = g.axis_indices(i);
    double s = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double k = g.wavenumber(g.mode_of(idx[a]));
      s += k * k;
    }
    out[i] = s;
  }
  return out;
}

std::vector<double> k_axis(const Grid& g, int axis) {
  std::vector<double> out(g.num_nodes());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto idx = g.axis_indices(i);
    const int m = g.mode_of(idx[axis]);
    out[i] = (m == -g.n / 2) ? 0.0 : g.wavenumber(m);
  }
  return out;
}

std::vector<double> dealias_mask(const Grid& g) {
  std::vector<double> out(g.num_nodes(), 1.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto idx = g.axis_indices(i);
    for (int a = 0; a < g.dim; ++a) {
      if (3 * std::abs(g.mode_of(idx[a])) > g.n) {
        out[i] = 0.0;
        break;
      }
    }
  }
  return out;
}

void apply_real_multiplier(SpectralField& f, const std::vector<double>& m) {
  if (m.size() != f.nodes()) throw ShapeError("multiplier size does not match grid");
  for (int c = 0; c < f.components(); ++c) {
    kernels::mul_real_pairs(reinterpret_cast<double*>(f.comp(c).data()), m.data(), f.nodes());
  }
}

void laplacian_inplace(SpectralField& f) {
  std::vector<double> m = k_sq(f.grid());
  for (double& v : m) v = -v;
  apply_real_multiplier(f, m);
}

void dealias_inplace(SpectralField& f) { apply_real_multiplier(f, dealias_mask(f.grid())); }

void semigroup_inplace(SpectralField& f, double t, Direction dir, SemigroupOptions opts,
                       double field_max_norm) {
  if (!(t >= 0.0)) throw EnvelopeError("heat_semigroup: t must be >= 0");
  const std::vector<double> ksq = k_sq(f.grid());

  if (dir == Direction::forward) {
    std::vector<double> m(ksq.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::exp(-t * ksq[i]);
    apply_real_multiplier(f, m);
    return;
  }

  if (field_max_norm < 0.0) field_max_norm = to_nodal(f).max_abs();

  if (!opts.override_guard && field_max_norm > 0.0) {
    // Amplified tail contribution, accumulated in log space (the raw
    // amplification e^{t k_max^2} can overflow any float format).
    const std::vector<double> mask = dealias_mask(f.grid());
    double peak = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < f.components(); ++c) {
      auto cs = f.comp(c);
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (mask[i] != 0.0) continue;
        const double mag = std::abs(cs[i]);
        if (mag == 0.0) continue;
        peak = std::max(peak, std::log(mag) + t * ksq[i]);
      }
    }
    if (std::isfinite(peak)) {
      double sum = 0.0;
      for (int c = 0; c < f.components(); ++c) {
        auto cs = f.comp(c);
        for (std::size_t i = 0; i < cs.size(); ++i) {
          if (mask[i] != 0.0) continue;
          const double mag = std::abs(cs[i]);
          if (mag == 0.0) continue;
          sum += std::exp(std::log(mag) + t * ksq[i] - peak);
        }
      }
      const double tail_log = peak + std::log(sum);
      const double limit_log = std::log(opts.tail_tol * field_max_norm);
      if (tail_log > limit_log) {
        throw BandLimitExceeded(
            "backward heat step amplifies the spectral tail to " + std::to_string(tail_log) +
            " (log), above the allowed " + std::to_string(limit_log) +
            " = log(tail_tol * max|f|); the raw backward propagator is ill-posed here");
      }
    }
  }

  // Amplify. Modes whose multiplier alone would overflow are handled in log
  // space; any nonzero coefficient that would still overflow is an error.
  for (int c = 0; c < f.components(); ++c) {
    auto cs = f.comp(c);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const double lg = t * ksq[i];
      if (lg <= kExpOverflow) {
        cs[i] *= std::exp(lg);
        continue;
      }
      const double mag = std::abs(cs[i]);
      if (mag == 0.0) continue;
      const double out_log = std::log(mag) + lg;
      if (out_log > kExpOverflow) {
        throw BandLimitExceeded("backward heat step overflows double range at |k|^2 = " +
                                std::to_string(ksq[i]) + ", t = " + std::to_string(t));
      }
      cs[i] *= std::exp(out_log) / mag;
    }
  }
}

void leray_inplace(SpectralField& f) {
  const Grid& g = f.grid();
  if (f.components() != g.dim) {
    throw ShapeError("leray_project requires a vector field with dim components");
  }
  std::vector<std::vector<double>> ks(g.dim);
  for (int a = 0; a < g.dim; ++a) ks[a] = k_axis(g, a);

  const std::size_t nn = f.nodes();
  std::vector<std::complex<double>> kdotu(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    std::complex<double> s = 0.0;
    for (int a = 0; a < g.dim; ++a) s += ks[a][i] * f.at(a, i);
    kdotu[i] = s;
  }
  for (std::size_t i = 0; i < nn; ++i) {
    double k2 = 0.0;
    for (int a = 0; a < g.dim; ++a) k2 += ks[a][i] * ks[a][i];
    if (k2 == 0.0) continue;  // zero mode (and pure-Nyquist modes) pass through
    const std::complex<double> factor = kdotu[i] / k2;
    for (int a = 0; a < g.dim; ++a) f.at(a, i) -= ks[a][i] * factor;
  }
}

SpectralField divergence(const SpectralField& vec) {
  const Grid& g = vec.grid();
  if (vec.components() != g.dim) throw ShapeError("divergence requires a vector field");
  SpectralField out(g, 1);
  const std::size_t nn = vec.nodes();
  for (int a = 0; a < g.dim; ++a) {
    const std::vector<double> k = k_axis(g, a);
    auto comp = vec.comp(a);
    for (std::size_t i = 0; i < nn; ++i) {
      out.at(0, i) += std::complex<double>(0.0, k[i]) * comp[i];
    }
  }
  return out;
}

double max_divergence(const SpectralField& vec) { return to_nodal(divergence(vec)).max_abs(); }

SpectralField nonlinear_term(const SpectralField& uhat) {
  const Grid& g = uhat.grid();
  const int d = g.dim;
  if (uhat.components() != d) throw ShapeError("nonlinear_term requires a vector field");

  SpectralField work = uhat;
  dealias_inplace(work);
  RealField u = to_nodal(work);

  const std::size_t nn = g.num_nodes();
  std::vector<std::vector<double>> ks(d);
  for (int a = 0; a < d; ++a) ks[a] = k_axis(g, a);

  // T_ab = u_a u_b (symmetric), transformed and differentiated on the fly:
  // out_a = sum_b i k_b T_ab.
  SpectralField out(g, d);
  std::vector<double> prod(nn);
  std::vector<std::complex<double>> cbuf(nn), that(nn);
  for (int a = 0; a < d; ++a) {
    for (int b = a; b < d; ++b) {
      kernels::mul(prod.data(), u.comp(a).data(), u.comp(b).data(), nn);
      for (std::size_t i = 0; i < nn; ++i) cbuf[i] = prod[i];
      fft::forward(g, cbuf.data(), that.data());
      for (std::size_t i = 0; i < nn; ++i) {
        const std::complex<double> ik_t = std::complex<double>(0.0, 1.0) * that[i];
        out.at(a, i) += ks[b][i] * ik_t;
        if (b != a) out.at(b, i) += ks[a][i] * ik_t;
      }
    }
  }
  dealias_inplace(out);
  leray_inplace(out);
  return out;
}

}  // namespace spectral

RealField laplacian(const RealField& f) {
  SpectralField s = to_spectral(f);
  spectral::laplacian_inplace(s);
  RealField out = to_nodal(s);
  spectral::check_finite(out, "laplacian");
  return out;
}

RealField heat_semigroup(const RealField& f, double t, Direction dir, SemigroupOptions opts) {
  SpectralField s = to_spectral(f);
  spectral::semigroup_inplace(s, t, dir, opts, f.max_abs());
  RealField out = to_nodal(s);
  spectral::check_finite(out, "heat_semigroup");
  return out;
}

RealField leray_project(const RealField& f) {
  SpectralField s = to_spectral(f);
  spectral::leray_inplace(s);
  RealField out = to_nodal(s);
  spectral::check_finite(out, "leray_project");
  return out;
}

RealField nonlinear_term(const RealField& u) {
  SpectralField s = to_spectral(u);
  RealField out = to_nodal(spectral::nonlinear_term(s));
  spectral::check_finite(out, "nonlinear_term");
  return out;
}

RealField divergence(const RealField& vec) {
  return to_nodal(spectral::divergence(to_spectral(vec)));
}

RealField gradient(const RealField& scalar) {
  if (scalar.components() != 1) throw ShapeError("gradient requires a scalar field");
  const Grid& g = scalar.grid();
  SpectralField s = to_spectral(scalar);
  SpectralField out(g, g.dim);
  const std::size_t nn = g.num_nodes();
  for (int a = 0; a < g.dim; ++a) {
    const std::vector<double> k = spectral::k_axis(g, a);
    for (std::size_t i = 0; i < nn; ++i) {
      out.at(a, i) = std::complex<double>(0.0, k[i]) * s.at(0, i);
    }
  }
  return to_nodal(out);
}

double max_divergence(const RealField& vec) {
  return spectral::max_divergence(to_spectral(vec));
}

}  // namespace timan
