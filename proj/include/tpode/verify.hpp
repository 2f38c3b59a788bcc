#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tpode/params.hpp"
#include "tpode/series.hpp"
#include "tpode/types.hpp"

namespace tpode {

// count Chebyshev-distributed points in (lo, hi), clustering toward both
// ends; the standard grid for the identity checks.
std::vector<double> chebyshev_grid(int count, double lo, double hi);

// The differential operator applied to a function with known value and two
// derivatives at x:
//   x(1-x)(r-x) [y'' + (a/x - b/(1-x) - c/(r-x) + d) y']
//     + (A/x - B/(1-x) - C/(r-x) + xD - E) y.
// Throws near_singular_point within `margin` of 0, 1 or r.
double apply_operator(double y, double y1, double y2, double x, const CanonicalParams& p,
                      double margin = 1e-9);

// Max over the grid of |J phi_n - eta(x) (tridiagonal action)| / max(1, |rhs|),
// with the operator side computed from analytic derivatives of phi_n and the
// action side from the n, n-1, n+1 basis elements.
double tridiagonal_identity_check(int n, const CanonicalParams& p, const BasisParams& basis,
                                  std::span<const double> grid);

// Exact two-boundary-term form of the operator applied to the truncated
// series: J y_N = eta(x) [sup_N f_N phi_{N+1} + sub_{N+1} f_{N+1} phi_N]
// where sup/sub are the operator-action coefficients. Returns the max
// relative discrepancy over the grid.
double truncation_residual_check(const SeriesSolution& sol, std::span<const double> grid);

// The boundary-term right-hand side above, as a function of x.
double truncation_boundary_term(const SeriesSolution& sol, double x);

// Dormand-Prince 5(4) adaptive integration of y'' = accel(x, y, y') from
// (x0, y0, yp0) to x1 with mixed abs/rel tolerance tol. Throws
// stiffness_failure on step-size underflow.
struct OdeEndpoint {
  double y = 0.0;
  double yp = 0.0;
  long steps = 0;
};

OdeEndpoint integrate_second_order(const std::function<double(double, double, double)>& accel,
                                   double x0, double y0, double yp0, double x1, double tol);

// Independent cross-check of a series solution: integrates
// J y = boundary-term(x) from the series' own initial data at the interval
// midpoint and compares y against series_eval at `checkpoints` points each
// side. Returns the max relative deviation.
double integrator_series_check(const SeriesSolution& sol, double lo, double hi,
                               int checkpoints, double tol);

// Deformation-limit diagnostic: for each d in d_values the deformed sequence
// (deformation 1/d) is compared against the terminating-3F2 values of the
// undeformed family; errors are |p_d - p_inf| / max(1, |p_inf|) maximized
// over n <= n_max, and slope is the least-squares log-log slope vs d.
struct LimitReport {
  std::vector<double> d_values;
  std::vector<double> errors;
  double slope = 0.0;
};

LimitReport limit_check(const CanonicalParams& p, const BasisParams& basis, int n_max,
                        std::span<const double> d_values);

}  // namespace tpode
