#pragma once

#include <complex>
#include <vector>

#include "tpode/params.hpp"
#include "tpode/types.hpp"

namespace tpode {

// Truncation of the three-term recursion as a tridiagonal matrix. In the
// ZetaPlane variable the eigenvalues are the zeros of the degree-N polynomial
// in zeta; in the ZLine variable (symmetric undeformed case only) the matrix
// is real symmetric with zero diagonal and its eigenvalues are the real zeros
// in z.
struct RecurrenceMatrix {
  enum class Variable { ZetaPlane, ZLine };
  Variable variable = Variable::ZetaPlane;
  std::vector<double> diag;
  // ZetaPlane: sup[n] = A_n and sub[n] = C_n for n < N (sub[0] = 0; entry
  // (n,n+1) is sup[n], entry (n+1,n) is sub[n+1]). ZLine: sup = sub = the
  // N-1 symmetric couplings sqrt(-A_n C_{n+1}).
  std::vector<double> sup;
  std::vector<double> sub;
  int size() const noexcept { return static_cast<int>(diag.size()); }
};

RecurrenceMatrix recurrence_matrix(int N, const HahnFamily& fam);

// The N zeros of the degree-N polynomial in the zeta plane: eigenvalues of
// the recurrence matrix, tightened by one Newton step on the recursively
// evaluated polynomial, sorted by real part (then imaginary). N <= 60.
std::vector<std::complex<double>> zeros(int N, const HahnFamily& fam);

// Real symmetric reduction for the symmetric undeformed case: zero diagonal,
// off-diagonals sqrt(-A_n C_{n+1}). Throws deformed_measure_unknown when the
// family is deformed and not_symmetrizable when mu != nu or an off-diagonal
// product -A_n C_{n+1} is nonpositive.
RecurrenceMatrix zline_matrix(int N, const HahnFamily& fam);

// Gauss data of the empirical measure: nodes are the z-line eigenvalues,
// weights the squared first components of the normalized eigenvectors
// (Christoffel numbers, summing to 1).
struct GaussMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussMeasure gauss_measure(int N, const HahnFamily& fam);

// Orthonormal-polynomial values q_0..q_{N-1} at z generated by the z-line
// recursion q_{n+1} = (z q_n - b_{n-1} q_{n-1}) / b_n; used for the discrete
// Gram diagnostics.
std::vector<double> zline_polynomials(const RecurrenceMatrix& m, double z);

// Eigenvalues (ascending) and first components of the orthonormal
// eigenvectors of a symmetric tridiagonal matrix, by implicit-shift QL.
// offdiag has size n-1. Throws numerical_failure on non-convergence.
void tridiag_eigen_first_row(std::vector<double>& diag, std::vector<double> offdiag,
                             std::vector<double>& first_row);

}  // namespace tpode
