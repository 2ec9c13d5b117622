// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "timan/field.hpp"

namespace timan::nse {

struct SolveOptions {
  double nu = 1.0;             // unit viscosity is the reference configuration
  double blowup_factor = 1e3;  // abort when sup|u| exceeds this times sup|u0|
};

// Pseudo-spectral trajectory of the incompressible momentum equation
// du/dt = nu*Lap(u) - P div(u (x) u) on [0, t_end], integrating-factor RK4,
// states stored spectrally at every step.
class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(Grid grid, double dt, double nu) : grid_(grid), dt_(dt), nu_(nu) {}

  const Grid& grid() const { return grid_; }
  double dt() const { return dt_; }
  double nu() const { return nu_; }
  double t_end() const { return times_.empty() ? 0.0 : times_.back(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<SpectralField>& states() const { return states_; }
  std::vector<SpectralField>& states() { return states_; }
  std::vector<double>& times() { return times_; }

  std::size_t index_of(double t) const;  // throws unless t is grid-aligned
  const SpectralField& state_at(double t) const { return states_[index_of(t)]; }
  RealField velocity_at(double t) const;

 private:
  Grid grid_;
  double dt_ = 0.0;
  double nu_ = 1.0;
  std::vector<double> times_;
  std::vector<SpectralField> states_;
};

Trajectory solve(const RealField& u0, double t_end, double dt, SolveOptions opts = {});

// Max-norm discrepancy between the stored state at t and the Duhamel
// right-hand side evaluated by exact spectral propagation plus quadrature
// over the stored states. Small residual certifies the solution is mild.
double mild_residual(const Trajectory& traj, double t);

// Exact time-derivative ladder at time t: each level applies the
// differentiated equation to the levels below it (never finite differences),
// with the level-(n-1) quadratic convolution sum built from binomial pairs.
struct Ladder {
  double t = 0.0;
  std::vector<RealField> fields;   // d/dt^n u, n = 0..n_max (nodal)
  std::vector<double> sup_norms;   // ||d/dt^n u||_inf
  std::vector<double> fitted_n;    // per-n (t^n sup / n^n)^{1/(n+1)}, index 0 unused
};

Ladder derivative_ladder(const Trajectory& traj, double t, int n_max);

struct FitRow {
  int n;
  double t_argmax;
  double sup_norm;  // at the argmax time
  double weighted;  // t^n sup / n^n at the argmax
  double n_n;       // weighted^{1/(n+1)}
};

struct FitResult {
  double big_n = 1.0;  // max over n of N(n), clamped below at 1
  std::vector<FitRow> rows;
};

FitResult fit_n(const Trajectory& traj, int n_max, std::span<const double> t_samples);

std::vector<double> default_t_samples();  // geometric 2^-9 .. 2^-1, 1
std::vector<double> dense_t_samples();    // the above plus midpoints 3*2^-(k+1)

// Max over (n <= n_max, t in t_grid) of t^n ||d/dt^n u|| / (N^{n+1} n^n);
// at or below 1 means the fitted bound generalizes.
double bound_ratio(const Trajectory& traj, double big_n, int n_max,
                   std::span<const double> t_grid);

struct ExtrapolateResult {
  RealField value;
  double err_vs_solver = 0.0;
  std::vector<double> err_by_order;  // relative max-norm error after each order
};

// Evaluates sum_n (d/dt^n u)(t) delta^n / n! and compares against the stored
// solver state at t + delta (t and t + delta must be grid-aligned).
ExtrapolateResult taylor_extrapolate(const Trajectory& traj, double t, double delta, int n_max,
                                     double big_n, bool override_radius = false);

// ||d/dt^n (t^n u)||_inf reconstructed from a ladder by the Leibniz rule.
double weighted_sup(const Ladder& ladder, int n);

struct WeightedFit {
  double m_const = 1.0;          // fitted M in M^{n-1/2} n^{n-2/3}
  std::vector<double> per_n;     // implied M(n), index 0..1 unused
};

WeightedFit fit_weighted(const Trajectory& traj, int n_max, std::span<const double> t_samples);

}  // namespace timan::nse
