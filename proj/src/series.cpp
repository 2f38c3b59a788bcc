#include "tpode/series.hpp"

#include <cmath>

#include "tpode/jacobi.hpp"

namespace tpode {

double g_norm(int n, double mu, double nu) {
  if (n < 0) throw Error(errc::invalid_argument, "g_norm: n < 0");
  if (!(mu + nu > -1.0)) {
    throw Error(errc::invalid_argument, "g_norm: requires mu + nu > -1");
  }
  // Extended precision in the log domain: the lgamma values grow like
  // n log n while their difference stays O(mu log n), so double lgamma alone
  // loses ~n-dependent digits in the ratio.
  const long double diff = std::lgammal(n + mu + nu + 1.0L) - std::lgammal(n + nu + 1.0L);
  return static_cast<double>((2.0L * n + mu + nu + 1.0L) * std::exp(diff));
}

namespace {

void check_interior(double x, const char* where) {
  if (!(x > 0.0) || !(x < 1.0)) {
    throw Error(errc::endpoint_evaluation, std::string(where) + ": x must lie in (0,1)");
  }
}

}  // namespace

double basis_eval(int n, double x, const BasisParams& basis, double r) {
  check_interior(x, "basis_eval");
  const double w = std::pow(x, basis.e0) * std::pow(1.0 - x, basis.e1) *
                   std::pow(r - x, basis.er) * std::exp(-basis.delta * x);
  return g_norm(n, basis.mu, basis.nu) * w * jacobi_eval(n, basis.mu, basis.nu, x);
}

std::array<double, 3> basis_eval_derivs(int n, double x, const BasisParams& basis, double r) {
  check_interior(x, "basis_eval_derivs");
  const double w = std::pow(x, basis.e0) * std::pow(1.0 - x, basis.e1) *
                   std::pow(r - x, basis.er) * std::exp(-basis.delta * x);
  // Logarithmic derivative of the weight factor and its derivative.
  const double l1 = basis.e0 / x - basis.e1 / (1.0 - x) - basis.er / (r - x) - basis.delta;
  const double l2 = -basis.e0 / (x * x) - basis.e1 / ((1.0 - x) * (1.0 - x)) -
                    basis.er / ((r - x) * (r - x));
  const double p0 = jacobi_eval(n, basis.mu, basis.nu, x);
  const double p1 = jacobi_deriv(n, basis.mu, basis.nu, x);
  const double p2 = jacobi_second_deriv(n, basis.mu, basis.nu, x);
  const double g = g_norm(n, basis.mu, basis.nu);
  return {g * w * p0, g * w * (l1 * p0 + p1),
          g * w * ((l1 * l1 + l2) * p0 + 2.0 * l1 * p1 + p2)};
}

SeriesSolution make_series(const CanonicalParams& p, const BasisParams& basis,
                           const HahnFamily& fam, int N, double margin) {
  if (N < 0) throw Error(errc::invalid_argument, "make_series: N < 0");
  SeriesSolution sol;
  sol.params = p;
  sol.basis = basis;
  sol.family = fam;
  sol.coeffs = tra_sequence(N + 1, p, basis);  // one extra for the residual identity
  sol.order = N;
  sol.margin = margin;
  return sol;
}

double series_eval(const SeriesSolution& sol, double x, int derivative_order) {
  if (derivative_order < 0 || derivative_order > 2) {
    throw Error(errc::invalid_argument, "series_eval: derivative order must be 0, 1 or 2");
  }
  if (x < sol.margin || x > 1.0 - sol.margin) {
    throw Error(errc::endpoint_evaluation, "series_eval: x outside [margin, 1-margin]");
  }
  // Neumaier compensated accumulation; the Jacobi factors alternate in sign.
  double sum = 0.0, comp = 0.0;
  for (int n = 0; n <= sol.order; ++n) {
    const double term =
        sol.coeffs.values[n] *
        basis_eval_derivs(n, x, sol.basis, sol.params.r)[derivative_order];
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sol.omega_factor * (sum + comp);
}

DecayReport coefficient_decay_report(const SeriesSolution& sol, double lo, double hi,
                                     int grid_count) {
  if (grid_count < 1) throw Error(errc::invalid_argument, "decay report: empty grid");
  DecayReport rep;
  rep.term_peak.resize(sol.order + 1, 0.0);
  for (int i = 0; i < grid_count; ++i) {
    const double x =
        grid_count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (grid_count - 1.0);
    for (int n = 0; n <= sol.order; ++n) {
      const double t = std::fabs(sol.coeffs.values[n] * basis_eval(n, x, sol.basis, sol.params.r));
      rep.term_peak[n] = std::max(rep.term_peak[n], t);
    }
  }
  rep.ratios.resize(sol.order > 0 ? sol.order : 0);
  for (int n = 0; n + 1 <= sol.order; ++n) {
    rep.ratios[n] = rep.term_peak[n] > 0.0 ? rep.term_peak[n + 1] / rep.term_peak[n] : 0.0;
  }
  // Trend over the second half of the ratio sequence.
  const size_t half = rep.ratios.size() / 2;
  double mean = 0.0;
  size_t count = 0;
  for (size_t i = half; i < rep.ratios.size(); ++i, ++count) mean += rep.ratios[i];
  rep.tail_decaying = count == 0 || mean / count < 1.0;
  return rep;
}

}  // namespace tpode
