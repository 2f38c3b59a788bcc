#include "tpode/canonical.hpp"

#include <algorithm>
#include <cmath>

namespace tpode {

QuadDecomposition partial_fraction(double at, double bt, double ct, double r) {
  if (!(r > 1.0)) {
    throw Error(errc::invalid_r, "partial_fraction: requires r > 1");
  }
  QuadDecomposition q;
  q.at = at;
  q.bt = bt;
  q.ct = ct;
  q.r = r;
  q.a = at / r;
  q.b = (at + bt + ct) / (1.0 - r);
  q.c = (at + r * bt + r * r * ct) / (r * (r - 1.0));
  return q;
}

double quad_reconstruct(const QuadDecomposition& q, double x) {
  return q.a * (1.0 - x) * (q.r - x) - q.b * x * (q.r - x) - q.c * x * (1.0 - x);
}

namespace {

// Quadratic coefficients of t -> poly(shift + scale*t), ascending.
std::array<double, 3> shift_scale_quadratic(const std::array<double, 3>& p, double shift,
                                            double scale) {
  const double c0 = p[0] + p[1] * shift + p[2] * shift * shift;
  const double c1 = (p[1] + 2.0 * p[2] * shift) * scale;
  const double c2 = p[2] * scale * scale;
  return {c0, c1, c2};
}

}  // namespace

Canonicalization canonicalize(const CubicOdeSpec& spec) {
  std::array<double, 3> roots = spec.roots;
  std::sort(roots.begin(), roots.end());
  const double span = std::max({1.0, std::fabs(roots[0]), std::fabs(roots[2])});
  const double tol = 1e-9 * span;
  if (roots[1] - roots[0] < tol || roots[2] - roots[1] < tol) {
    throw Error(errc::degenerate_roots, "canonicalize: roots too close");
  }

  Canonicalization out;
  out.shift = roots[0];
  out.scale = roots[1] - roots[0];
  const double r = (roots[2] - roots[0]) / out.scale;
  if (r - 1.0 < 1e-9) {
    throw Error(errc::degenerate_roots, "canonicalize: r degenerate (too close to 1)");
  }

  // p2 = P2(shift + scale*x)/scale, phat2 = Phat2(...)/scale^2, p1 = P1(...)/scale.
  auto p2 = shift_scale_quadratic(spec.pi2, out.shift, out.scale);
  auto ph2 = shift_scale_quadratic(spec.pihat2, out.shift, out.scale);
  for (auto& v : p2) v /= out.scale;
  for (auto& v : ph2) v /= out.scale * out.scale;

  const QuadDecomposition q2 = partial_fraction(p2[0], p2[1], p2[2], r);
  const QuadDecomposition qh = partial_fraction(ph2[0], ph2[1], ph2[2], r);

  CanonicalParams& cp = out.params;
  cp.a = q2.a;
  cp.b = q2.b;
  cp.c = q2.c;
  cp.d = spec.pi0;
  cp.r = r;
  cp.A = qh.a;
  cp.B = qh.b;
  cp.C = qh.c;
  // p1(x) = P1(shift + scale*x)/scale = x*D - E.
  cp.D = spec.pi1[1];
  cp.E = -(spec.pi1[0] + spec.pi1[1] * out.shift) / out.scale;
  return out;
}

std::array<double, 3> reconstruct_polynomials(const Canonicalization& canon, double t) {
  const CanonicalParams& p = canon.params;
  const double x = (t - canon.shift) / canon.scale;
  QuadDecomposition q2{0, 0, 0, p.a, p.b, p.c, p.r};
  QuadDecomposition qh{0, 0, 0, p.A, p.B, p.C, p.r};
  const double p2 = quad_reconstruct(q2, x) * canon.scale;
  const double ph2 = quad_reconstruct(qh, x) * canon.scale * canon.scale;
  const double p1 = (x * p.D - p.E) * canon.scale;
  return {p2, ph2, p1};
}

}  // namespace tpode
