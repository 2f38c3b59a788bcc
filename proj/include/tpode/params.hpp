#pragma once

#include <optional>
#include <vector>

#include "tpode/types.hpp"

namespace tpode {

// Exponents and Jacobi indices of the square-integrable basis
//   phi_n(x) = g_n x^e0 (1-x)^e1 (r-x)^er e^{-delta x} P_n^{(mu,nu)}(x)
// tied to the equation parameters by
//   mu^2 = (1-b)^2 + 4B/(r-1),   nu^2 = (1-a)^2 - 4A/r,
//   2 e0 = nu + 1 - a,  2 e1 = mu + 1 - b,  2 er = -c,  delta in {0, d}.
struct BasisParams {
  double e0 = 0.0;
  double e1 = 0.0;
  double er = 0.0;
  double delta = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double chi = 0.0;  // (a + b + c) / 2
  Branch branch = Branch::Top;
};

// Parameter set of the deformed continuous-Hahn recursion. Only zeta and the
// pairwise sums lambda+rho, lambda+sigma, tau+rho, tau+sigma enter any
// recursion coefficient, so the lambda/z split is presentational; individual
// values are kept for reporting and for the symmetric-case reduction.
struct HahnFamily {
  double lambda = 0.0;
  double tau = 0.0;
  double rho = 0.0;
  double sigma = 0.0;
  double zeta = 0.0;    // the combination lambda + i z
  double deform = 0.0;  // deformation strength 1/d
  Branch branch = Branch::Top;
  double mu = 0.0, nu = 0.0, chi = 0.0, D = 0.0;  // inputs to B_n

  double sum_lr() const noexcept { return lambda + rho; }
  double sum_ls() const noexcept { return lambda + sigma; }
  double sum_tr() const noexcept { return tau + rho; }
  double sum_ts() const noexcept { return tau + sigma; }
  double sum_all() const noexcept { return lambda + tau + rho + sigma; }
};

struct ConstraintCheck {
  const char* name;
  double residual;  // violation magnitude for equalities, margin for inequalities
  bool pass;
};

struct ValidationReport {
  std::vector<ConstraintCheck> checks;
  bool pass = false;
};

// Number of constraints reported by validate(), mirrored in the C API.
inline constexpr int kNumConstraints = 6;

// The two dependent parameters:
//   4C = r(r-1) c(c-2)
//   E = A/r + B/(r-1) + rD - (rc/2)[a+b+c+d(r-1)-2] + (c/2)(a + c/2 - 1).
std::pair<double, double> derive_dependent(double a, double b, double c, double d,
                                           double r, double A, double B, double D);

// Checks r > 1, d != 0, the two inequality bounds on A and B, and the two
// dependent-parameter identities. Equalities use a mixed absolute/relative
// tolerance of 1e-12; inequalities get 1e-14 slack.
ValidationReport validate(const CanonicalParams& p);

// Basis parameters for a validated set. sign_mu/sign_nu select the root of
// mu^2/nu^2 (Minus is admissible only when the value stays above -1).
// Throws complex_index on negative squares, index_out_of_range on a chosen
// root <= -1, constraint_violation when validate() fails.
BasisParams basis_params(const CanonicalParams& p, Branch branch,
                         RootSign sign_mu = RootSign::Plus,
                         RootSign sign_nu = RootSign::Plus);

// Hahn-family parameters:
//   zeta = [mu + 1 +- (b + rc)]/2,   sigma = -lambda + mu + 1,
//   tau = lambda + (nu-mu)/2 -+ chi, rho = -lambda + (mu+nu)/2 + 1 +- chi,
// with deformation 1/d. Default lambda = zeta (z = 0); any other choice moves
// (lambda, tau) and (rho, sigma) oppositely and leaves the pairwise sums
// fixed.
HahnFamily hahn_family(const CanonicalParams& p, const BasisParams& basis,
                       std::optional<double> lambda_choice = std::nullopt);

// Lambda that collapses the family to rho = lambda, sigma = tau
// (2 lambda = mu + 1 +- chi); only meaningful when mu = nu.
double symmetric_lambda(const BasisParams& basis);

// True iff A/r + B/(r-1) = (a-b)/2 ((a+b)/2 - 1) to 1e-12 and the two Jacobi
// indices coincide to 1e-12 (equivalently rho = lambda, sigma = tau is
// achievable).
bool symmetric_case_check(const CanonicalParams& p);

}  // namespace tpode
