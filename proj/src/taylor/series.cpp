// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <string>

#include "timan/errors.hpp"
#include "timan/kernels.hpp"
#include "timan/spectral_ops.hpp"
#include "timan/taylor.hpp"

namespace timan::taylor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.6931471805599453;

// Keep mantissa max norms inside [2^-32, 2^32] by shifting into the exponent.
void normalize(RealField& mantissa, int& exp2) {
  const double ma = mantissa.max_abs();
  if (ma == 0.0) return;
  if (ma <= 4294967296.0 && ma >= 1.0 / 4294967296.0) return;
  int e = 0;
  std::frexp(ma, &e);
  const int shift = e - 1;  // brings max norm into [1, 2)
  kernels::scale(mantissa.values().data(), mantissa.values().data(), std::ldexp(1.0, -shift),
                 mantissa.values().size());
  exp2 += shift;
  if (std::abs(exp2) > (1 << 30)) {
    throw InternalError("coefficient exponent tracking overflowed (|exp| > 2^30)");
  }
}

}  // namespace

double Series::log_sup_coeff(int j) const {
  const double ma = coeff[j].max_abs();
  if (ma == 0.0) return -kInf;
  return std::log(ma) + exps[j] * kLn2;
}

double Series::log_sup_deriv(int j) const {
  const double ls = log_sup_coeff(j);
  return std::isfinite(ls) ? ls + std::lgamma(j + 1.0) : ls;
}

Series compute_coefficients(const RealField& a, int order) {
  if (order < 1) throw EnvelopeError("compute_coefficients: order must be >= 1");
  if (!a.all_finite()) throw ShapeError("compute_coefficients: data contains non-finite values");

  Series s;
  s.base = a;
  s.coeff.reserve(order + 1);
  s.exps.assign(order + 1, 0);

  s.coeff.push_back(a);
  normalize(s.coeff[0], s.exps[0]);

  for (int j = 1; j <= order; ++j) {
    RealField next = laplacian(s.coeff[j - 1]);
    kernels::scale(next.values().data(), next.values().data(), 1.0 / j, next.values().size());
    s.exps[j] = s.exps[j - 1];
    normalize(next, s.exps[j]);
    s.coeff.push_back(std::move(next));
  }
  return s;
}

EvalResult evaluate_series(const Series& s, double t, EvalOptions opts) {
  const int order = s.order();
  if (opts.delta >= 0.0 && !opts.override_radius &&
      std::abs(t) > opts.delta * (1.0 + 1e-12)) {
    throw RadiusExceeded("evaluate_series: |t| = " + std::to_string(std::abs(t)) +
                         " beyond the certified window " + std::to_string(opts.delta));
  }

  EvalResult res{RealField::zeros(s.base.grid(), s.base.components()), 0.0, false, {}};
  res.term_log_sup.assign(order + 1, -kInf);

  std::vector<double> comp(res.value.values().size(), 0.0);

  // Running factor t^j 2^{exps[j]} tracked as mantissa * 2^exp so magnitudes
  // far outside double range never materialize.
  double fm = 1.0;
  int fe = 0;

  for (int j = 0; j <= order; ++j) {
    const double mant_sup = s.coeff[j].max_abs();
    const int total_exp = fe + s.exps[j];
    if (mant_sup > 0.0 && fm != 0.0) {
      res.term_log_sup[j] = std::log(mant_sup) + std::log(std::abs(fm)) + total_exp * kLn2;
    }

    if (fm != 0.0 && mant_sup > 0.0) {
      const double factor_log2 = std::log2(std::abs(fm)) + total_exp;
      if (factor_log2 > 1000.0) {
        // Terms left the representable range: the partial sum up to j-1 is
        // returned with divergence diagnostics.
        res.diverged = true;
        res.remainder_bound = kInf;
        return res;
      }
      if (factor_log2 + std::log2(mant_sup) > -1070.0) {
        const double factor = std::ldexp(fm, total_exp);
        kernels::kahan_axpy(res.value.values().data(), comp.data(), s.coeff[j].values().data(),
                            factor, res.value.values().size());
      }
    }

    fm *= t;
    if (fm != 0.0) {
      int e = 0;
      fm = std::frexp(fm, &e);
      fe += e;
    }
  }

  // Convergence diagnostics over the final window of nonzero terms.
  const double sum_sup = res.value.max_abs();
  const double last = res.term_log_sup[order];
  const double negligible = (sum_sup > 0.0) ? std::log(sum_sup) + std::log(1e-18) : -kInf;
  if (std::isfinite(last) && last > negligible) {
    double rho = 0.0;
    int used = 0;
    for (int j = order; j > 0 && used < 5; --j) {
      const double cur = res.term_log_sup[j];
      const double prev = res.term_log_sup[j - 1];
      if (!std::isfinite(cur) || !std::isfinite(prev)) break;
      rho = std::max(rho, std::exp(cur - prev));
      ++used;
    }
    if (used == 0 || rho >= 1.0) {
      res.diverged = true;
      res.remainder_bound = kInf;
    } else {
      res.remainder_bound = std::exp(last) * rho / (1.0 - rho);
    }
  }
  return res;
}

RealField backward_solve(const RealField& a, double t, int order, BackwardOptions opts) {
  Series s = compute_coefficients(a, order);
  Certificate cert = fit_certificate(s, opts.cert);
  if (!cert.pass && !opts.override_certificate) {
    throw CertificateFailed("backward_solve: growth certificate failed (A3 = " +
                            std::to_string(cert.a3) + ", tail slope = " +
                            std::to_string(cert.slope) + " > tol); the data does not admit a "
                            "backward-heat solution in this class");
  }
  const double delta = 0.5 * cert.radius_lower;
  if (!opts.override_radius && std::abs(t) > delta * (1.0 + 1e-12)) {
    throw RadiusExceeded("backward_solve: |t| = " + std::to_string(std::abs(t)) +
                         " beyond 0.5 * radius_lower = " + std::to_string(delta));
  }
  EvalResult ev = evaluate_series(s, -t);
  if (ev.diverged) {
    throw DivergentSeries("backward_solve: series terms failed to decay at t = " +
                          std::to_string(t));
  }
  return std::move(ev.value);
}

EvalResult Glued::evaluate(double t, bool override_radius) const {
  EvalOptions opts;
  opts.delta = delta;
  opts.override_radius = override_radius;
  EvalResult ev = evaluate_series(series, t, opts);
  if (ev.diverged) {
    throw DivergentSeries("glued evaluation diverged at t = " + std::to_string(t) +
                          " inside the certified window; certificate is inconsistent");
  }
  return ev;
}

Glued certify_initial_analyticity(const RealField& a, int order, CertOptions opts) {
  Glued g;
  g.series = compute_coefficients(a, order);
  g.cert = fit_certificate(g.series, opts);
  if (!g.cert.pass) {
    std::string diag = "certify_initial_analyticity: certificate failed; implied A3 over the "
                       "window grows with slope " + std::to_string(g.cert.slope) +
                       " (tol " + std::to_string(opts.slope_tol) + "), A3 = " +
                       std::to_string(g.cert.a3);
    if (!g.cert.per_j.empty()) {
      diag += "; last window entries (j, implied A3):";
      const std::size_t count = std::min<std::size_t>(3, g.cert.per_j.size());
      for (std::size_t i = g.cert.per_j.size() - count; i < g.cert.per_j.size(); ++i) {
        diag += " (" + std::to_string(g.cert.per_j[i].j) + ", " +
                std::to_string(g.cert.per_j[i].implied_a3) + ")";
      }
    }
    throw CertificateFailed(diag);
  }
  g.delta = 0.5 * g.cert.radius_lower;
  return g;
}

}  // namespace timan::taylor
