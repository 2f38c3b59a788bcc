#include "tpode/jacobi.hpp"

#include <cmath>

#include "tpode/spectral.hpp"

namespace tpode {

namespace {

constexpr double kDegenTol = 1e-10;

void check_indices(double mu, double nu) {
  if (!(mu > -1.0) || !(nu > -1.0)) {
    throw Error(errc::index_out_of_range, "jacobi: requires mu > -1 and nu > -1");
  }
}

void check_denominator(double s, int k) {
  if (std::fabs(s) < kDegenTol || std::fabs(s + 2.0) < kDegenTol) {
    throw Error(errc::degenerate_indices,
                "jacobi: recursion denominator 2n+mu+nu degenerate at n=" + std::to_string(k),
                k);
  }
}

}  // namespace

double jacobi_eval(int n, double mu, double nu, double x) {
  check_indices(mu, nu);
  if (n < 0) throw Error(errc::invalid_argument, "jacobi_eval: n < 0");
  if (n == 0) return 1.0;

  // x P_k = a_k P_k + b_k P_{k-1} + c_k P_{k+1} solved forward for P_{k+1}.
  double prev = 0.0, cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + mu + nu;
    check_denominator(s, k);
    const double ak = 0.5 * (1.0 + (nu * nu - mu * mu) / (s * (s + 2.0)));
    const double bk = k == 0 ? 0.0 : (k + mu) * (k + nu) / (s * (s + 1.0));
    const double ck = (k + 1.0) * (k + mu + nu + 1.0) / ((s + 1.0) * (s + 2.0));
    const double next = ((x - ak) * cur - bk * prev) / ck;
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_deriv(int n, double mu, double nu, double x) {
  check_indices(mu, nu);
  if (n < 0) throw Error(errc::invalid_argument, "jacobi_deriv: n < 0");
  if (x <= 0.0 || x >= 1.0) {
    throw Error(errc::endpoint_evaluation, "jacobi_deriv: x must lie in (0,1)");
  }
  if (n == 0) return 0.0;
  const double s = 2.0 * n + mu + nu;
  check_denominator(s, n);
  const double combo =
      (n + mu + nu + 1.0) *
      ((mu - nu) * n / (s * (s + 2.0)) * jacobi_eval(n, mu, nu, x) +
       (n + mu) * (n + nu) / (s * (s + 1.0)) * jacobi_eval(n - 1, mu, nu, x) -
       n * (n + 1.0) / ((s + 1.0) * (s + 2.0)) * jacobi_eval(n + 1, mu, nu, x));
  return combo / (x * (1.0 - x));
}

double jacobi_second_deriv(int n, double mu, double nu, double x) {
  if (x <= 0.0 || x >= 1.0) {
    throw Error(errc::endpoint_evaluation, "jacobi_second_deriv: x must lie in (0,1)");
  }
  if (n == 0) return 0.0;
  const double p1 = jacobi_deriv(n, mu, nu, x);
  const double p0 = jacobi_eval(n, mu, nu, x);
  return -((nu + 1.0 - x * (mu + nu + 2.0)) * p1 + n * (n + mu + nu + 1.0) * p0) /
         (x * (1.0 - x));
}

double jacobi_ode_residual(int n, double mu, double nu, double x) {
  if (x <= 0.0 || x >= 1.0) {
    throw Error(errc::endpoint_evaluation, "jacobi_ode_residual: x must lie in (0,1)");
  }
  if (n == 0) return 0.0;
  // Evaluate the ODE with the derivative from the three-term identity and the
  // second derivative from a differentiated recursion step at n-1, so the
  // residual is not trivially zero by construction.
  const double p0 = jacobi_eval(n, mu, nu, x);
  const double p1 = jacobi_deriv(n, mu, nu, x);
  double p2;
  if (n == 1) {
    // P_1 is linear; second derivative vanishes identically.
    p2 = 0.0;
  } else {
    // Differentiate x P_{n-1} = a P_{n-1} + b P_{n-2} + c P_n once:
    // P_{n-1} + x P'_{n-1} = a P'_{n-1} + b P'_{n-2} + c P'_n, then once more
    // via the same identity applied to the derivatives of lower degrees.
    const int k = n - 1;
    const double s = 2.0 * k + mu + nu;
    check_denominator(s, k);
    const double ak = 0.5 * (1.0 + (nu * nu - mu * mu) / (s * (s + 2.0)));
    const double bk = k == 0 ? 0.0 : (k + mu) * (k + nu) / (s * (s + 1.0));
    const double ck = (k + 1.0) * (k + mu + nu + 1.0) / ((s + 1.0) * (s + 2.0));
    const double dm1 = jacobi_deriv(k, mu, nu, x);
    const double dm2 = k >= 1 ? jacobi_deriv(k - 1, mu, nu, x) : 0.0;
    const double ddm1 = k >= 2 ? jacobi_second_deriv(k, mu, nu, x) : 0.0;
    const double ddm2 = k >= 2 ? jacobi_second_deriv(k - 1, mu, nu, x) : 0.0;
    // 2 P'_{n-1} + x P''_{n-1} = a P''_{n-1} + b P''_{n-2} + c P''_n
    p2 = (2.0 * dm1 + x * ddm1 - ak * ddm1 - bk * ddm2) / ck;
  }
  return x * (1.0 - x) * p2 + (nu + 1.0 - x * (mu + nu + 2.0)) * p1 +
         n * (n + mu + nu + 1.0) * p0;
}

QuadratureRule gauss_jacobi(int n, double mu, double nu) {
  check_indices(mu, nu);
  if (n < 1) throw Error(errc::invalid_argument, "gauss_jacobi: n < 1");
  if (std::fabs(mu + nu) < kDegenTol) {
    throw Error(errc::degenerate_indices, "gauss_jacobi: mu + nu degenerate at n=0", 0);
  }

  // Monic recurrence of the classical weight on [-1,1] mapped to [0,1]:
  // nodes (t+1)/2 and half off-diagonals.
  std::vector<double> diag(n);
  std::vector<double> offdiag(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + mu + nu;
    diag[k] = 0.5 * ((nu * nu - mu * mu) / (s * (s + 2.0)) + 1.0);
    if (k >= 1) {
      // (k+mu+nu)/(s-1) cancels exactly at k = 1; keeping it explicit avoids
      // the spurious 0/0 when mu + nu is near -1.
      const double tail = k == 1 ? 1.0 : (k + mu + nu) / (s - 1.0);
      const double bk = 4.0 * k * (k + mu) * (k + nu) * tail / (s * s * (s + 1.0));
      offdiag[k - 1] = 0.5 * std::sqrt(bk);
    }
  }

  std::vector<double> first_row;
  tridiag_eigen_first_row(diag, offdiag, first_row);

  const double mass =
      std::exp(std::lgamma(nu + 1.0) + std::lgamma(mu + 1.0) - std::lgamma(mu + nu + 2.0));
  QuadratureRule rule;
  rule.nodes = std::move(diag);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) rule.weights[k] = mass * first_row[k] * first_row[k];
  return rule;
}

}  // namespace tpode
