#pragma once

#include <array>

#include "tpode/types.hpp"

namespace tpode {

// A second-order equation with a monic cubic leading coefficient,
//   P3(t) y'' + [P2(t) + pi0 P3(t)] y' + [Phat2(t)/P3(t) + P1(t)] y = 0,
// specified by the three real roots of P3 and the coefficients of the
// lower-degree polynomials in the original variable t (ascending order).
struct CubicOdeSpec {
  std::array<double, 3> roots{0.0, 1.0, 2.0};
  double pi0 = 1.0;
  std::array<double, 3> pi2{0.0, 0.0, 0.0};
  std::array<double, 3> pihat2{0.0, 0.0, 0.0};
  std::array<double, 2> pi1{0.0, 0.0};
};

// A quadratic q(x) = at + bt*x + ct*x^2 written as
//   q(x) = x(1-x)(r-x) [a/x - b/(1-x) - c/(r-x)].
// The residues satisfy  at = a*r,  at + bt + ct = b*(1-r),
// at + r*bt + r^2*ct = c*r*(r-1).
struct QuadDecomposition {
  double at = 0.0, bt = 0.0, ct = 0.0;  // quadratic coefficients
  double a = 0.0, b = 0.0, c = 0.0;     // residues
  double r = 2.0;
};

struct Canonicalization {
  CanonicalParams params;
  double shift = 0.0;  // smallest root
  double scale = 1.0;  // gap between the two smallest roots
};

// Residues of the three-pole decomposition above. Throws invalid_r for r <= 1.
QuadDecomposition partial_fraction(double at, double bt, double ct, double r);

// Value of the decomposed quadratic at x, from the residues.
double quad_reconstruct(const QuadDecomposition& q, double x);

// Reduce a CubicOdeSpec to canonical form. Roots are sorted internally;
// throws degenerate_roots when two roots are closer than
// 1e-9 * max(1, |roots|). The affine map is t = shift + scale * x, and the
// input polynomials divided by scale (pihat2 by scale^2) are decomposed per
// QuadDecomposition to give (a,b,c), (A,B,C) and the linear part x*D - E.
Canonicalization canonicalize(const CubicOdeSpec& spec);

// Values of the original P2, Phat2, P1 at t, reconstructed from a
// canonicalization; used to round-trip against the inputs.
std::array<double, 3> reconstruct_polynomials(const Canonicalization& canon, double t);

}  // namespace tpode
