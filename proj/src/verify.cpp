#include "tpode/verify.hpp"

#include <cmath>

#include "tpode/coefficients.hpp"

namespace tpode {

std::vector<double> chebyshev_grid(int count, double lo, double hi) {
  std::vector<double> pts(count);
  const double mid = 0.5 * (lo + hi);
  const double rad = 0.5 * (hi - lo);
  for (int i = 0; i < count; ++i) {
    pts[i] = mid - rad * std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * count));
  }
  return pts;
}

double apply_operator(double y, double y1, double y2, double x, const CanonicalParams& p,
                      double margin) {
  if (std::fabs(x) < margin || std::fabs(1.0 - x) < margin || std::fabs(p.r - x) < margin) {
    throw Error(errc::near_singular_point, "apply_operator: x too close to a singular point");
  }
  const double lead = x * (1.0 - x) * (p.r - x);
  const double drift = p.a / x - p.b / (1.0 - x) - p.c / (p.r - x) + p.d;
  const double potential =
      p.A / x - p.B / (1.0 - x) - p.C / (p.r - x) + x * p.D - p.E;
  return lead * (y2 + drift * y1) + potential * y;
}

namespace {

double eta_factor(double x, const CanonicalParams& p, Branch branch) {
  return -branch_sign(branch) * p.d * (p.r - x);
}

}  // namespace

double tridiagonal_identity_check(int n, const CanonicalParams& p, const BasisParams& basis,
                                  std::span<const double> grid) {
  if (n < 0) throw Error(errc::invalid_argument, "tridiagonal_identity_check: n < 0");
  const OperatorAction oa = operator_action(n, p, basis);
  double worst = 0.0;
  for (double x : grid) {
    const auto d = basis_eval_derivs(n, x, basis, p.r);
    const double lhs = apply_operator(d[0], d[1], d[2], x, p);
    const double below = n >= 1 ? basis_eval(n - 1, x, basis, p.r) : 0.0;
    const double above = basis_eval(n + 1, x, basis, p.r);
    const double rhs =
        eta_factor(x, p, basis.branch) * (oa.diag * d[0] - oa.sub * below + oa.sup * above);
    worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
  }
  return worst;
}

double truncation_boundary_term(const SeriesSolution& sol, double x) {
  const int N = sol.order;
  const OperatorAction at_n = operator_action(N, sol.params, sol.basis);
  const OperatorAction at_n1 = operator_action(N + 1, sol.params, sol.basis);
  const double fN = sol.coeffs.values[N];
  const double fN1 = sol.coeffs.values[N + 1];
  return sol.omega_factor * eta_factor(x, sol.params, sol.basis.branch) *
         (at_n.sup * fN * basis_eval(N + 1, x, sol.basis, sol.params.r) +
          at_n1.sub * fN1 * basis_eval(N, x, sol.basis, sol.params.r));
}

double truncation_residual_check(const SeriesSolution& sol, std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) {
    const double lhs = apply_operator(series_eval(sol, x, 0), series_eval(sol, x, 1),
                                      series_eval(sol, x, 2), x, sol.params);
    const double rhs = truncation_boundary_term(sol, x);
    worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
  }
  return worst;
}

OdeEndpoint integrate_second_order(const std::function<double(double, double, double)>& accel,
                                   double x0, double y0, double yp0, double x1, double tol) {
  // Dormand-Prince 5(4) on the first-order system (y, y').
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                          e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

  if (tol < 1e-13) tol = 1e-13;
  const double dir = x1 >= x0 ? 1.0 : -1.0;
  double x = x0, y = y0, yp = yp0;
  double h = dir * std::min(1e-3, std::fabs(x1 - x0));
  OdeEndpoint out;

  auto rhs = [&](double xs, double ys, double yps, double& dy, double& dyp) {
    dy = yps;
    dyp = accel(xs, ys, yps);
  };

  while (dir * (x1 - x) > 0.0) {
    if (dir * (x + h - x1) > 0.0) h = x1 - x;
    double k1y, k1p, k2y, k2p, k3y, k3p, k4y, k4p, k5y, k5p, k6y, k6p, k7y, k7p;
    rhs(x, y, yp, k1y, k1p);
    rhs(x + c2 * h, y + h * a21 * k1y, yp + h * a21 * k1p, k2y, k2p);
    rhs(x + c3 * h, y + h * (a31 * k1y + a32 * k2y), yp + h * (a31 * k1p + a32 * k2p), k3y,
        k3p);
    rhs(x + c4 * h, y + h * (a41 * k1y + a42 * k2y + a43 * k3y),
        yp + h * (a41 * k1p + a42 * k2p + a43 * k3p), k4y, k4p);
    rhs(x + c5 * h, y + h * (a51 * k1y + a52 * k2y + a53 * k3y + a54 * k4y),
        yp + h * (a51 * k1p + a52 * k2p + a53 * k3p + a54 * k4p), k5y, k5p);
    rhs(x + h, y + h * (a61 * k1y + a62 * k2y + a63 * k3y + a64 * k4y + a65 * k5y),
        yp + h * (a61 * k1p + a62 * k2p + a63 * k3p + a64 * k4p + a65 * k5p), k6y, k6p);
    const double y5 = y + h * (b1 * k1y + b3 * k3y + b4 * k4y + b5 * k5y + b6 * k6y);
    const double p5 = yp + h * (b1 * k1p + b3 * k3p + b4 * k4p + b5 * k5p + b6 * k6p);
    rhs(x + h, y5, p5, k7y, k7p);
    const double y4 = y + h * (e1 * k1y + e3 * k3y + e4 * k4y + e5 * k5y + e6 * k6y + e7 * k7y);
    const double p4 = yp + h * (e1 * k1p + e3 * k3p + e4 * k4p + e5 * k5p + e6 * k6p + e7 * k7p);

    const double sy = std::max({1.0, std::fabs(y), std::fabs(y5)});
    const double sp = std::max({1.0, std::fabs(yp), std::fabs(p5)});
    const double err =
        std::max(std::fabs(y5 - y4) / sy, std::fabs(p5 - p4) / sp) / tol;

    if (err <= 1.0) {
      x += h;
      y = y5;
      yp = p5;
      ++out.steps;
    }
    const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, factor));
    if (std::fabs(h) < 1e-14 * std::max(1.0, std::fabs(x))) {
      throw Error(errc::stiffness_failure, "integrate_second_order: step size underflow");
    }
    if (out.steps > 2'000'000) {
      throw Error(errc::stiffness_failure, "integrate_second_order: step budget exhausted");
    }
  }
  out.y = y;
  out.yp = yp;
  return out;
}

double integrator_series_check(const SeriesSolution& sol, double lo, double hi,
                               int checkpoints, double tol) {
  const CanonicalParams p = sol.params;
  auto accel = [&](double x, double y, double yp) {
    const double lead = x * (1.0 - x) * (p.r - x);
    const double drift = p.a / x - p.b / (1.0 - x) - p.c / (p.r - x) + p.d;
    const double potential = p.A / x - p.B / (1.0 - x) - p.C / (p.r - x) + x * p.D - p.E;
    return (truncation_boundary_term(sol, x) - potential * y) / lead - drift * yp;
  };

  const double mid = 0.5 * (lo + hi);
  double worst = 0.0;
  for (int side = 0; side < 2; ++side) {
    double x = mid;
    double y = series_eval(sol, mid, 0);
    double yp = series_eval(sol, mid, 1);
    const double target_end = side == 0 ? hi : lo;
    for (int k = 1; k <= checkpoints; ++k) {
      const double xt = mid + (target_end - mid) * k / checkpoints;
      const OdeEndpoint end = integrate_second_order(accel, x, y, yp, xt, tol);
      const double ref = series_eval(sol, xt, 0);
      worst = std::max(worst,
                       std::fabs(end.y - ref) / std::max(1.0, std::fabs(ref)));
      x = xt;
      y = end.y;
      yp = end.yp;
    }
  }
  return worst;
}

LimitReport limit_check(const CanonicalParams& p, const BasisParams& basis, int n_max,
                        std::span<const double> d_values) {
  if (d_values.size() < 3) {
    throw Error(errc::invalid_argument, "limit_check: need at least 3 d values");
  }
  HahnFamily fam = hahn_family(p, basis);
  std::vector<double> reference(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    reference[n] = continuous_hahn_3f2(n, fam.lambda, fam.tau, fam.rho, fam.sigma, fam.zeta);
  }

  LimitReport rep;
  for (double d : d_values) {
    HahnFamily deformed = fam;
    deformed.deform = 1.0 / d;
    const CoefficientSequence seq = deformed_hahn_sequence(n_max, deformed, fam.zeta);
    double err = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      err = std::max(err, std::fabs(seq.values[n] - reference[n]) /
                              std::max(1.0, std::fabs(reference[n])));
    }
    rep.d_values.push_back(d);
    rep.errors.push_back(err);
  }

  // Least-squares slope of log(err) vs log(d).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = static_cast<int>(rep.d_values.size());
  for (int i = 0; i < m; ++i) {
    const double lx = std::log(rep.d_values[i]);
    const double ly = std::log(std::max(rep.errors[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return rep;
}

}  // namespace tpode
