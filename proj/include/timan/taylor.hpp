// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <vector>

#include "timan/field.hpp"

namespace timan::taylor {

// Time-Taylor expansion u(t, x) = sum_j c_j(x) t^j of a heat evolution with
// data a, where c_j = Lap^j a / j!. Each stored coefficient is a mantissa
// field plus a power-of-two exponent offset (c_j = mantissa_j * 2^exps[j]);
// mantissa max norms are kept inside [2^-32, 2^32] so the ladder never
// overflows even when the raw Lap^j a grow like j^j.
struct Series {
  RealField base;
  std::vector<RealField> coeff;  // mantissas, index 0..J
  std::vector<int> exps;

  int order() const { return static_cast<int>(coeff.size()) - 1; }
  // ln of the max norm of c_j (-inf for an identically zero coefficient).
  double log_sup_coeff(int j) const;
  // ln of the max norm of a_j = j! c_j.
  double log_sup_deriv(int j) const;
};

Series compute_coefficients(const RealField& a, int order);

struct CertOptions {
  int j_lo = -1;  // defaults to max(1, J/2)
  int j_hi = -1;  // defaults to J
  double slope_tol = 0.05;
};

// Fitted witnesses for the growth condition |a_j| <= A3^{j+1} j^j. A4 is the
// spatial-weight exponent slot, identically 0 on a periodic box.
struct Certificate {
  double a3 = 0.0;
  double a4 = 0.0;
  bool pass = false;
  double slope = 0.0;  // tail slope of log implied A3(j) vs log j
  double radius_lower = std::numeric_limits<double>::infinity();  // 1/(e*A3)
  int j_lo = 0, j_hi = 0;
  struct Row {
    int j;
    double log_sup;     // ln ||a_j||_inf
    double implied_a3;  // (||a_j|| / j^j)^{1/(j+1)}
  };
  std::vector<Row> per_j;
};

Certificate fit_certificate(const Series& s, CertOptions opts = {});

struct EvalOptions {
  // When delta >= 0, require |t| <= delta unless overridden.
  double delta = -1.0;
  bool override_radius = false;
};

struct EvalResult {
  RealField value;         // partial sum through order J
  double remainder_bound;  // geometric tail bound from the last term ratio
  bool diverged;           // terms failed to decay over the final window
  std::vector<double> term_log_sup;  // ln max-norm of c_j t^j per term
};

// Exponent-aligned compensated summation of the series at time t.
EvalResult evaluate_series(const Series& s, double t, EvalOptions opts = {});

struct BackwardOptions {
  bool override_certificate = false;
  bool override_radius = false;
  CertOptions cert;
};

// Value v(t) with heat_semigroup(v, t, forward) == a: the backward-heat
// solution built from the certified series (evaluated at -t).
RealField backward_solve(const RealField& a, double t, int order, BackwardOptions opts = {});

struct RadiusEstimate {
  RealField pointwise;   // per-node radius, +inf sentinel for entire nodes
  RealField confidence;  // relative rms residual of the per-node ratio fit
  double global = std::numeric_limits<double>::infinity();
  int j_lo = 0, j_hi = 0;
};

// Per-node convergence radius from consecutive-coefficient ratios
// |c_j|/|c_{j+1}| extrapolated linearly in 1/j over the top half of the
// ladder. Nodes whose coefficients sit below the trustworthy range (or below
// the 1e-300 floor) get the +inf sentinel.
RadiusEstimate estimate_radius(const Series& s);

// Certified two-sided expansion around t = 0: one coefficient ladder serving
// both time directions on (-delta, delta), delta = 0.5 * radius_lower.
struct Glued {
  Certificate cert;
  Series series;
  double delta = 0.0;

  EvalResult evaluate(double t, bool override_radius = false) const;
};

Glued certify_initial_analyticity(const RealField& a, int order, CertOptions opts = {});

}  // namespace timan::taylor
