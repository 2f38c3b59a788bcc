#include "tpode/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "tpode/coefficients.hpp"

namespace tpode {

RecurrenceMatrix recurrence_matrix(int N, const HahnFamily& fam) {
  if (N < 1) throw Error(errc::invalid_argument, "recurrence_matrix: N < 1");
  RecurrenceMatrix m;
  m.variable = RecurrenceMatrix::Variable::ZetaPlane;
  m.diag.resize(N);
  m.sup.resize(N);
  m.sub.resize(N);
  const double sgn = branch_sign(fam.branch);
  for (int n = 0; n < N; ++n) {
    const auto [An, Cn] = hahn_ac(n, fam);
    m.diag[n] = -(An + Cn - sgn * fam.deform * hahn_bn(n, fam));
    m.sup[n] = An;
    m.sub[n] = Cn;  // sub[0] = 0, never used by the matrix
  }
  return m;
}

namespace {

// Degree-N polynomial and derivative at complex zeta from the stored
// recursion, rescaled along the way to stay inside double range.
std::pair<std::complex<double>, std::complex<double>> eval_recursive(
    const RecurrenceMatrix& m, std::complex<double> zeta) {
  std::complex<double> pm1 = 0.0, p = 1.0, dm1 = 0.0, dp = 0.0;
  for (int n = 0; n < m.size(); ++n) {
    const std::complex<double> next =
        ((zeta - m.diag[n]) * p - m.sub[n] * pm1) / m.sup[n];
    const std::complex<double> dnext =
        ((zeta - m.diag[n]) * dp + p - m.sub[n] * dm1) / m.sup[n];
    pm1 = p;
    p = next;
    dm1 = dp;
    dp = dnext;
    const double scale = std::max({std::abs(p), std::abs(pm1), 1.0});
    if (scale > 1e100) {
      pm1 /= scale;
      p /= scale;
      dm1 /= scale;
      dp /= scale;
    }
  }
  return {p, dp};
}

}  // namespace

std::vector<std::complex<double>> zeros(int N, const HahnFamily& fam) {
  if (N < 1 || N > 60) {
    throw Error(errc::invalid_argument, "zeros: N must lie in [1, 60]");
  }
  const RecurrenceMatrix m = recurrence_matrix(N, fam);

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    T(n, n) = m.diag[n];
    if (n + 1 < N) {
      T(n, n + 1) = m.sup[n];
      T(n + 1, n) = m.sub[n + 1];
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(T, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(errc::numerical_failure, "zeros: eigenvalue iteration failed");
  }

  std::vector<std::complex<double>> out(N);
  for (int i = 0; i < N; ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    const auto [p, dp] = eval_recursive(m, z);
    if (std::abs(dp) > 0.0) {
      const std::complex<double> step = p / dp;
      if (std::abs(step) < 1e-2 * std::max(1.0, std::abs(z))) z -= step;
    }
    out[i] = z;
  }
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return out;
}

RecurrenceMatrix zline_matrix(int N, const HahnFamily& fam) {
  if (N < 1) throw Error(errc::invalid_argument, "zline_matrix: N < 1");
  if (std::fabs(fam.deform) > 0.0) {
    throw Error(errc::deformed_measure_unknown,
                "zline_matrix: no known measure for the deformed family");
  }
  // rho = lambda, sigma = tau achievable iff lambda+sigma = tau+rho (mu = nu).
  const double asym = std::fabs(fam.sum_ls() - fam.sum_tr());
  if (asym > 1e-10 * std::max(1.0, std::fabs(fam.sum_ls()))) {
    throw Error(errc::not_symmetrizable, "zline_matrix: family is not symmetric (mu != nu)");
  }

  RecurrenceMatrix m;
  m.variable = RecurrenceMatrix::Variable::ZLine;
  m.diag.assign(N, 0.0);
  m.sup.resize(N > 1 ? N - 1 : 0);
  for (int n = 0; n + 1 < N; ++n) {
    const double An = hahn_ac(n, fam).first;
    const double Cn1 = hahn_ac(n + 1, fam).second;
    const double prod = -An * Cn1;
    if (!(prod > 0.0)) {
      throw Error(errc::not_symmetrizable,
                  "zline_matrix: off-diagonal product -A_n C_{n+1} <= 0 at n=" +
                      std::to_string(n),
                  n);
    }
    m.sup[n] = std::sqrt(prod);
  }
  m.sub = m.sup;
  return m;
}

GaussMeasure gauss_measure(int N, const HahnFamily& fam) {
  const RecurrenceMatrix m = zline_matrix(N, fam);
  GaussMeasure gm;
  gm.nodes = m.diag;  // zeros
  std::vector<double> first_row;
  tridiag_eigen_first_row(gm.nodes, m.sup, first_row);
  gm.weights.resize(N);
  for (int i = 0; i < N; ++i) gm.weights[i] = first_row[i] * first_row[i];
  return gm;
}

std::vector<double> zline_polynomials(const RecurrenceMatrix& m, double z) {
  if (m.variable != RecurrenceMatrix::Variable::ZLine) {
    throw Error(errc::invalid_argument, "zline_polynomials: needs a ZLine matrix");
  }
  const int N = m.size();
  std::vector<double> q(N);
  q[0] = 1.0;
  for (int n = 0; n + 1 < N; ++n) {
    const double below = n >= 1 ? m.sup[n - 1] * q[n - 1] : 0.0;
    q[n + 1] = (z * q[n] - below) / m.sup[n];
  }
  return q;
}

void tridiag_eigen_first_row(std::vector<double>& diag, std::vector<double> offdiag,
                             std::vector<double>& first_row) {
  const int n = static_cast<int>(diag.size());
  if (static_cast<int>(offdiag.size()) != std::max(0, n - 1)) {
    throw Error(errc::invalid_argument, "tridiag_eigen: off-diagonal size mismatch");
  }
  first_row.assign(n, 0.0);
  if (n == 0) return;
  first_row[0] = 1.0;
  if (n == 1) return;

  // Implicit-shift QL, rotating only the tracked first-row components.
  std::vector<double>& d = diag;
  std::vector<double> e(offdiag);
  e.push_back(0.0);

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 50) {
          throw Error(errc::numerical_failure, "tridiag_eigen: too many QL iterations");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = first_row[i + 1];
          first_row[i + 1] = s * first_row[i] + c * f;
          first_row[i] = c * first_row[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  // Sort eigenvalues ascending, carrying the first-row components along.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
  std::vector<double> ds(n), zs(n);
  for (int i = 0; i < n; ++i) {
    ds[i] = d[order[i]];
    zs[i] = first_row[order[i]];
  }
  d = std::move(ds);
  first_row = std::move(zs);
}

}  // namespace tpode
