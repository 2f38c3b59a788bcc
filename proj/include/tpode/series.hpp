#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tpode/coefficients.hpp"
#include "tpode/params.hpp"
#include "tpode/types.hpp"

namespace tpode {

// Normalization constant g_n = (2n+mu+nu+1) Gamma(n+mu+nu+1) / Gamma(n+nu+1),
// evaluated in the log domain. Requires mu + nu > -1 (so every Gamma argument
// is positive for n >= 0).
double g_norm(int n, double mu, double nu);

// phi_n(x) = g_n x^e0 (1-x)^e1 (r-x)^er e^{-delta x} P_n^{(mu,nu)}(x) on the
// open interval; endpoints are rejected.
double basis_eval(int n, double x, const BasisParams& basis, double r);

// {phi_n, phi_n', phi_n''} with both derivatives analytic (product rule plus
// the Jacobi derivative/ODE identities, no differencing).
std::array<double, 3> basis_eval_derivs(int n, double x, const BasisParams& basis, double r);

// Truncated series y_N(x) = omega * sum_{n=0}^{N} f_n phi_n(x). One extra
// coefficient f_{N+1} is always generated so the truncation-residual identity
// can be checked without re-running the recursion.
struct SeriesSolution {
  CanonicalParams params;
  BasisParams basis;
  HahnFamily family;
  CoefficientSequence coeffs;  // N + 2 values
  int order = 0;               // truncation N
  double omega_factor = 1.0;   // sqrt(omega(z)) overall factor; unknown analytically
  double margin = 1e-3;        // evaluation restricted to [margin, 1-margin]
};

SeriesSolution make_series(const CanonicalParams& p, const BasisParams& basis,
                           const HahnFamily& fam, int N, double margin = 1e-3);

// Series value or derivative (order <= 2) at x, accumulated with compensated
// summation. Throws endpoint_evaluation outside [margin, 1-margin].
double series_eval(const SeriesSolution& sol, double x, int derivative_order = 0);

// Per-term peak magnitudes max_x |f_n phi_n(x)| over a uniform grid and the
// ratios of successive peaks; flags whether the tail trend is decaying. No
// convergence claim is made.
struct DecayReport {
  std::vector<double> term_peak;
  std::vector<double> ratios;
  bool tail_decaying = false;
};

DecayReport coefficient_decay_report(const SeriesSolution& sol, double lo, double hi,
                                     int grid_count);

}  // namespace tpode
