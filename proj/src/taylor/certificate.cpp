// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <string>

#include "timan/errors.hpp"
#include "timan/taylor.hpp"

namespace timan::taylor {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kE = 2.718281828459045;
}  // namespace

Certificate fit_certificate(const Series& s, CertOptions opts) {
  const int order = s.order();
  int j_lo = opts.j_lo >= 0 ? opts.j_lo : std::max(1, order / 2);
  int j_hi = opts.j_hi >= 0 ? opts.j_hi : order;
  if (j_lo < 0 || j_hi > order || j_lo > j_hi) {
    throw WindowError("fit_certificate: window [" + std::to_string(j_lo) + ", " +
                      std::to_string(j_hi) + "] not inside [0, " + std::to_string(order) + "]");
  }
  if (j_hi - j_lo + 1 < 4) {
    throw WindowError("fit_certificate: window must contain at least 4 orders");
  }

  Certificate cert;
  cert.j_lo = j_lo;
  cert.j_hi = j_hi;

  for (int j = j_lo; j <= j_hi; ++j) {
    const double log_sup = s.log_sup_deriv(j);
    if (!std::isfinite(log_sup)) continue;  // identically zero coefficient
    const double jlnj = j == 0 ? 0.0 : j * std::log(static_cast<double>(j));
    const double implied = std::exp((log_sup - jlnj) / (j + 1));
    cert.per_j.push_back({j, log_sup, implied});
    cert.a3 = std::max(cert.a3, implied);
  }

  // Tail slope of log implied A3(j) against log j discriminates j^j growth
  // (slope -> 0) from factorially faster growth (slope bounded away from 0).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& row : cert.per_j) {
    if (row.j < 1 || !(row.implied_a3 > 0.0)) continue;
    const double x = std::log(static_cast<double>(row.j));
    const double y = std::log(row.implied_a3);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m >= 2) {
    const double denom = m * sxx - sx * sx;
    cert.slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  }

  cert.pass = std::isfinite(cert.a3) && cert.slope <= opts.slope_tol;
  cert.radius_lower = cert.a3 > 0.0 ? 1.0 / (kE * cert.a3) : kInf;
  return cert;
}

}  // namespace timan::taylor
