#include "tpode/coefficients.hpp"

#include <cmath>
#include <string>

namespace tpode {

namespace {

constexpr double kDegenTol = 1e-10;

void check_denominators(double s, int n, std::initializer_list<double> offsets) {
  for (double off : offsets) {
    if (std::fabs(s + off) < kDegenTol) {
      throw Error(errc::degenerate_indices,
                  "recursion denominator 2n+mu+nu+" + std::to_string(off) +
                      " degenerate at n=" + std::to_string(n),
                  n);
    }
  }
}

}  // namespace

TraCoefficients tra_coefficients(int n, const CanonicalParams& p, const BasisParams& basis) {
  const double mu = basis.mu, nu = basis.nu, chi = basis.chi;
  const double sgn = branch_sign(basis.branch);
  const double s = 2.0 * n + mu + nu;
  check_denominators(s, n, {0.0, 1.0, 2.0});

  TraCoefficients tc;
  tc.lhs = 0.5 * (mu + 1.0 + sgn * (p.b + p.r * p.c));
  const double bn = (n + 0.5 * (mu + nu + 1.0)) * (n + 0.5 * (mu + nu + 1.0)) -
                    (chi - 0.5) * (chi - 0.5) + p.D;
  tc.diag = sgn * bn / p.d + mu + 1.0 +
            (nu - mu) * n * (n + mu + nu + 1.0) / (s * (s + 2.0)) -
            0.5 * (1.0 + (mu * mu - nu * nu) / (s * (s + 2.0))) *
                (0.5 * (mu + nu) + 1.0 - sgn * chi);
  tc.sup = -(n + mu + 1.0) * (n + mu + nu + 1.0) / ((s + 1.0) * (s + 2.0)) *
           (n + 0.5 * (mu + nu) + 1.0 + sgn * chi);
  tc.sub = n == 0 ? 0.0
                  : n * (n + nu) / (s * (s + 1.0)) * (n + 0.5 * (mu + nu) - sgn * chi);
  return tc;
}

OperatorAction operator_action(int n, const CanonicalParams& p, const BasisParams& basis) {
  const double mu = basis.mu, nu = basis.nu, chi = basis.chi;
  const double sgn = branch_sign(basis.branch);
  const double s = 2.0 * n + mu + nu;
  check_denominators(s, n, {0.0, 2.0, 3.0});
  if (n > 0) check_denominators(s, n, {-1.0});

  OperatorAction oa;
  const double bn = (n + 0.5 * (mu + nu + 1.0)) * (n + 0.5 * (mu + nu + 1.0)) -
                    (chi - 0.5) * (chi - 0.5) + p.D;
  oa.diag = sgn * bn / p.d - (0.5 * (nu + 1.0) - sgn * chi) - sgn * 0.5 * (p.b + p.r * p.c) +
            (nu - mu) * n * (n + mu + nu + 1.0) / (s * (s + 2.0)) +
            0.5 * (1.0 + (nu * nu - mu * mu) / (s * (s + 2.0))) *
                (0.5 * (mu + nu) + 1.0 - sgn * chi);
  oa.sub = n == 0 ? 0.0
                  : (n + mu) * (n + mu + nu) / (s * (s - 1.0)) *
                        (n + 0.5 * (mu + nu) + sgn * chi);
  oa.sup = (n + 1.0) * (n + nu + 1.0) / ((s + 3.0) * (s + 2.0)) *
           (n + 0.5 * (mu + nu) + 1.0 - sgn * chi);
  return oa;
}

double hahn_bn(int n, const HahnFamily& fam) {
  const double h = n + 0.5 * (fam.mu + fam.nu + 1.0);
  return h * h - (fam.chi - 0.5) * (fam.chi - 0.5) + fam.D;
}

std::pair<double, double> hahn_ac(int n, const HahnFamily& fam) {
  const double S = fam.sum_all();
  const double s = 2.0 * n + S;
  if (std::fabs(s - 1.0) < kDegenTol || std::fabs(s) < kDegenTol ||
      (n > 0 && std::fabs(s - 2.0) < kDegenTol)) {
    throw Error(errc::degenerate_indices,
                "hahn_ac: denominator degenerate at n=" + std::to_string(n), n);
  }
  const double An =
      -(n + S - 1.0) * (n + fam.sum_lr()) * (n + fam.sum_ls()) / ((s - 1.0) * s);
  const double Cn = n == 0 ? 0.0
                           : n * (n + fam.sum_tr() - 1.0) * (n + fam.sum_ts() - 1.0) /
                                 ((s - 2.0) * (s - 1.0));
  return {An, Cn};
}

bool offdiag_products_positive(const HahnFamily& fam, int n_max) {
  for (int n = 0; n < n_max; ++n) {
    const double An = hahn_ac(n, fam).first;
    const double Cn1 = hahn_ac(n + 1, fam).second;
    if (!(-An * Cn1 > 0.0)) return false;
  }
  return true;
}

CoefficientSequence deformed_hahn_sequence(int N, const HahnFamily& fam, double zeta_eval) {
  if (N < 0) throw Error(errc::invalid_argument, "deformed_hahn_sequence: N < 0");
  const double sgn = branch_sign(fam.branch);
  CoefficientSequence seq;
  seq.values.reserve(N + 1);
  seq.values.push_back(1.0);
  double prev = 0.0;
  for (int n = 0; n < N; ++n) {
    const auto [An, Cn] = hahn_ac(n, fam);
    if (std::fabs(An) < 1e-300) {
      throw Error(errc::breakdown, "deformed_hahn_sequence: A_n = 0 at n=" + std::to_string(n),
                  n);
    }
    const double diag = -(An + Cn - sgn * fam.deform * hahn_bn(n, fam));
    const double cur = seq.values.back();
    seq.values.push_back(((zeta_eval - diag) * cur - Cn * prev) / An);
    prev = cur;
  }
  return seq;
}

CoefficientSequence tra_sequence(int N, const CanonicalParams& p, const BasisParams& basis) {
  if (N < 0) throw Error(errc::invalid_argument, "tra_sequence: N < 0");
  CoefficientSequence seq;
  seq.values.reserve(N + 1);
  seq.values.push_back(1.0);
  double prev = 0.0;
  for (int n = 0; n < N; ++n) {
    const TraCoefficients tc = tra_coefficients(n, p, basis);
    if (std::fabs(tc.sup) < 1e-300) {
      throw Error(errc::breakdown, "tra_sequence: coefficient of f_{n+1} = 0 at n=" +
                                       std::to_string(n),
                  n);
    }
    const double cur = seq.values.back();
    seq.values.push_back(((tc.lhs - tc.diag) * cur - tc.sub * prev) / tc.sup);
    prev = cur;
  }
  return seq;
}

double continuous_hahn_3f2(int n, double lambda, double tau, double rho, double sigma,
                           double zeta) {
  if (n < 0) throw Error(errc::invalid_argument, "continuous_hahn_3f2: n < 0");
  const double S = lambda + tau + rho + sigma;
  const double lr = lambda + rho;
  const double ls = lambda + sigma;
  double total = 1.0;
  double term = 1.0;
  for (int k = 0; k < n; ++k) {
    if (std::fabs(lr + k) < kDegenTol || std::fabs(ls + k) < kDegenTol) {
      throw Error(errc::pole_in_sum,
                  "continuous_hahn_3f2: lower parameter pole at term k=" + std::to_string(k),
                  k);
    }
    term *= (k - n) * (n + S - 1.0 + k) * (zeta + k) / ((lr + k) * (ls + k) * (k + 1.0));
    total += term;
  }
  return total;
}

EquivalenceReport equivalence_report(const CanonicalParams& p, const BasisParams& basis,
                                     const HahnFamily& fam, int N) {
  const double sgn = branch_sign(basis.branch);
  EquivalenceReport rep;
  rep.per_n.reserve(N + 1);
  auto mixed = [](double x, double y) {
    return std::fabs(x - y) / std::max({1.0, std::fabs(x), std::fabs(y)});
  };
  for (int n = 0; n <= N; ++n) {
    const TraCoefficients tc = tra_coefficients(n, p, basis);
    const auto [An, Cn] = hahn_ac(n, fam);
    const double mapped_diag = fam.zeta + An + Cn - sgn * fam.deform * hahn_bn(n, fam);
    double err = mixed(tc.lhs - tc.diag, mapped_diag);
    err = std::max(err, mixed(tc.sup, An));
    err = std::max(err, mixed(tc.sub, Cn));
    rep.per_n.push_back(err);
    rep.max_discrepancy = std::max(rep.max_discrepancy, err);
  }
  return rep;
}

}  // namespace tpode
