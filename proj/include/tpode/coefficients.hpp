#pragma once

#include <utility>
#include <vector>

#include "tpode/params.hpp"
#include "tpode/types.hpp"

namespace tpode {

// Coefficients of the expansion-coefficient recursion
//   lhs * f_n = diag * f_n + sup * f_{n+1} + sub * f_{n-1},
// with lhs the n-independent constant [mu + 1 +- (b + rc)]/2. sub carries an
// explicit factor n, so sub = 0 at n = 0.
struct TraCoefficients {
  double lhs = 0.0;
  double diag = 0.0;
  double sup = 0.0;
  double sub = 0.0;
};

// Coefficients of the operator acting on a basis element,
//   J phi_n = eta(x) [diag * phi_n - sub * phi_{n-1} + sup * phi_{n+1}],
// where eta(x) = -+ d (r - x) by branch. sub multiplies phi_{-1} == 0 at
// n = 0 and is returned as 0 there.
struct OperatorAction {
  double diag = 0.0;
  double sub = 0.0;
  double sup = 0.0;
};

// Diagonal/sub/super sequences of either recursion in matrix-friendly form.
struct TridiagonalRecurrence {
  enum class Kind { Tra, DeformedHahn };
  Kind kind = Kind::DeformedHahn;
  std::vector<double> diag;
  std::vector<double> sub;  // sub[0] is identically 0
  std::vector<double> sup;
  double lhs_shift = 0.0;  // lhs constant for Tra, zeta for DeformedHahn
};

// Expansion coefficients normalized to values[0] = 1.
struct CoefficientSequence {
  std::vector<double> values;
};

TraCoefficients tra_coefficients(int n, const CanonicalParams& p, const BasisParams& basis);

OperatorAction operator_action(int n, const CanonicalParams& p, const BasisParams& basis);

// B_n = (n + (mu+nu+1)/2)^2 - (chi - 1/2)^2 + D.
double hahn_bn(int n, const HahnFamily& fam);

// Continuous-Hahn recursion coefficients (A_n, C_n), evaluated through the
// pairwise parameter sums only. C_0 = 0.
std::pair<double, double> hahn_ac(int n, const HahnFamily& fam);

// Checked predicate: -A_n C_{n+1} > 0 for n < n_max. Required for the
// orthogonal-polynomial reading of the recursion; not assumed anywhere.
bool offdiag_products_positive(const HahnFamily& fam, int n_max);

// Forward recursion of the deformed family at zeta_eval,
//   zeta p_n = A_n p_{n+1} + C_n p_{n-1} - (A_n + C_n -+ deform * B_n) p_n,
// from p_0 = 1, p_{-1} = 0. Returns N+1 values. Throws breakdown (with the
// offending index) when an A_n vanishes or a degenerate denominator is hit.
CoefficientSequence deformed_hahn_sequence(int N, const HahnFamily& fam, double zeta_eval);

// Same sequence generated from the TRA recursion coefficients.
CoefficientSequence tra_sequence(int N, const CanonicalParams& p, const BasisParams& basis);

// Terminating hypergeometric definition of the undeformed polynomial:
//   3F2(-n, n + lambda+tau+rho+sigma - 1, zeta; lambda+rho, lambda+sigma; 1).
// Throws pole_in_sum when a lower parameter hits a nonpositive integer
// inside the terminating range.
double continuous_hahn_3f2(int n, double lambda, double tau, double rho, double sigma,
                           double zeta);

// Coefficient-wise comparison of the TRA triples (lhs - diag, sup, sub)
// against the mapped Hahn triples (zeta + A_n + C_n -+ B_n/d, A_n, C_n).
// Discrepancies are |x - y| / max(1, |x|, |y|).
struct EquivalenceReport {
  std::vector<double> per_n;  // max discrepancy of the triple at each n
  double max_discrepancy = 0.0;
};

EquivalenceReport equivalence_report(const CanonicalParams& p, const BasisParams& basis,
                                     const HahnFamily& fam, int N);

}  // namespace tpode
