// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "timan/errors.hpp"
#include "timan/parallel.hpp"
#include "timan/taylor.hpp"

namespace timan::taylor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.6931471805599453;
// Coefficient values this far (relative) below the field max carry mostly
// transform round-off and are excluded from the per-node fit.
constexpr double kTrustLog = 27.631021115928547;  // ln(1e12)
constexpr double kFloorLog = -690.7755278982137;  // ln(1e-300)
constexpr double kRatioCap = 1e300;
constexpr double kEntireCap = 1e6;

}  // namespace

RadiusEstimate estimate_radius(const Series& s) {
  const int order = s.order();
  if (order < 8) throw WindowError("estimate_radius: needs order >= 8");
  const int j_lo = order / 2;
  const int j_hi = order;

  const Grid& grid = s.base.grid();
  const int comps = s.base.components();
  const std::size_t nn = grid.num_nodes();

  RadiusEstimate est;
  est.j_lo = j_lo;
  est.j_hi = j_hi;
  est.pointwise = RealField::zeros(grid, 1);
  est.confidence = RealField::zeros(grid, 1);

  // Per-order field-wide log sup, for the trustworthiness cut.
  std::vector<double> field_log(order + 1);
  for (int j = 0; j <= order; ++j) field_log[j] = s.log_sup_coeff(j);

  parallel_for(nn, [&](std::size_t node) {
    // ln |c_j(x)| per order, taking the largest component magnitude.
    std::vector<double> lc(j_hi - j_lo + 2, -kInf);
    for (int j = j_lo; j <= j_hi; ++j) {
      double mag = 0.0;
      for (int c = 0; c < comps; ++c) mag = std::max(mag, std::abs(s.coeff[j].at(c, node)));
      if (mag > 0.0) lc[j - j_lo] = std::log(mag) + s.exps[j] * kLn2;
    }

    auto usable = [&](int j) {
      const double v = lc[j - j_lo];
      if (!std::isfinite(v) || v < kFloorLog) return false;
      return !std::isfinite(field_log[j]) || v >= field_log[j] - kTrustLog;
    };

    std::vector<double> xs, ys;  // x = 1/j, y = |c_j| / |c_{j+1}|
    for (int j = j_lo; j < j_hi; ++j) {
      if (!usable(j) || !usable(j + 1)) continue;
      const double diff = lc[j - j_lo] - lc[j + 1 - j_lo];
      double ratio;
      if (diff > 690.0) {
        ratio = kRatioCap;
      } else if (diff < -690.0) {
        ratio = 0.0;
      } else {
        ratio = std::exp(diff);
      }
      xs.push_back(1.0 / j);
      ys.push_back(ratio);
    }

    if (xs.size() < 4) {
      // Nothing resolvable at this node (coefficients at or below the noise
      // floor): entire by convention.
      est.pointwise.at(0, node) = kInf;
      est.confidence.at(0, node) = 0.0;
      return;
    }

    // Growing ratios mean the series behaves like an entire function here.
    const std::size_t half = xs.size() / 2;
    double lo_mean = 0.0, hi_mean = 0.0;  // xs are ordered by increasing j
    for (std::size_t i = 0; i < half; ++i) lo_mean += ys[i];
    for (std::size_t i = xs.size() - half; i < xs.size(); ++i) hi_mean += ys[i];
    lo_mean /= half;
    hi_mean /= half;
    if (hi_mean > 1.5 * lo_mean && hi_mean > 0.0) {
      est.pointwise.at(0, node) = kInf;
      est.confidence.at(0, node) = 0.0;
      return;
    }

    // Least-squares line y = alpha + beta / j; the intercept extrapolates the
    // ratio test to j -> inf.
    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double denom = m * sxx - sx * sx;
    double alpha = denom != 0.0 ? (sxx * sy - sx * sxy) / denom : sy / m;
    const double beta = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
    alpha = std::max(alpha, 0.0);

    double rss = 0.0, mean_abs = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - (alpha + beta * xs[i]);
      rss += r * r;
      mean_abs += std::abs(ys[i]);
    }
    mean_abs /= m;
    const double rms = std::sqrt(rss / m);

    if (alpha > kEntireCap) {
      est.pointwise.at(0, node) = kInf;
      est.confidence.at(0, node) = 0.0;
      return;
    }
    est.pointwise.at(0, node) = alpha;
    est.confidence.at(0, node) = mean_abs > 0.0 ? rms / mean_abs : 0.0;
  });

  est.global = kInf;
  for (std::size_t node = 0; node < nn; ++node) {
    est.global = std::min(est.global, est.pointwise.at(0, node));
  }
  return est;
}

}  // namespace timan::taylor
