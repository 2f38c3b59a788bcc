#include "tpode/params.hpp"

#include <cmath>

namespace tpode {

std::pair<double, double> derive_dependent(double a, double b, double c, double d,
                                           double r, double A, double B, double D) {
  const double C = 0.25 * r * (r - 1.0) * c * (c - 2.0);
  const double E = A / r + B / (r - 1.0) + r * D -
                   0.5 * r * c * (a + b + c + d * (r - 1.0) - 2.0) +
                   0.5 * c * (a + 0.5 * c - 1.0);
  return {C, E};
}

namespace {

constexpr double kEqualityTol = 1e-12;
constexpr double kInequalitySlack = 1e-14;

bool equality_holds(double lhs, double rhs) {
  const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  return std::fabs(lhs - rhs) <= kEqualityTol * scale;
}

}  // namespace

ValidationReport validate(const CanonicalParams& p) {
  ValidationReport rep;
  rep.checks.reserve(kNumConstraints);

  const double r_margin = p.r - 1.0;
  rep.checks.push_back({"r > 1", r_margin, r_margin > kInequalitySlack * std::max(1.0, std::fabs(p.r))});

  rep.checks.push_back({"d != 0", std::fabs(p.d), std::fabs(p.d) > kInequalitySlack});

  const double a_bound = p.r * (1.0 - p.a) * (1.0 - p.a);
  const double a_margin = a_bound - 4.0 * p.A;
  const double a_scale = std::max({1.0, std::fabs(a_bound), 4.0 * std::fabs(p.A)});
  rep.checks.push_back({"4A <= r(1-a)^2", a_margin, a_margin >= -kInequalitySlack * a_scale});

  const double b_bound = -(p.r - 1.0) * (1.0 - p.b) * (1.0 - p.b);
  const double b_margin = 4.0 * p.B - b_bound;
  const double b_scale = std::max({1.0, std::fabs(b_bound), 4.0 * std::fabs(p.B)});
  rep.checks.push_back({"4B >= -(r-1)(1-b)^2", b_margin, b_margin >= -kInequalitySlack * b_scale});

  const auto [C_expected, E_expected] =
      derive_dependent(p.a, p.b, p.c, p.d, p.r, p.A, p.B, p.D);
  rep.checks.push_back(
      {"4C = r(r-1)c(c-2)", std::fabs(p.C - C_expected), equality_holds(p.C, C_expected)});
  rep.checks.push_back(
      {"E identity", std::fabs(p.E - E_expected), equality_holds(p.E, E_expected)});

  rep.pass = true;
  for (const auto& chk : rep.checks) rep.pass = rep.pass && chk.pass;
  return rep;
}

namespace {

double signed_root(double square, RootSign sign, const char* which) {
  if (square < -1e-13) {
    throw Error(errc::complex_index, std::string(which) + " index squared is negative");
  }
  const double root = std::sqrt(std::max(square, 0.0));
  const double value = sign == RootSign::Plus ? root : -root;
  if (value <= -1.0) {
    throw Error(errc::index_out_of_range,
                std::string(which) + " index <= -1 for the chosen root sign");
  }
  return value;
}

}  // namespace

BasisParams basis_params(const CanonicalParams& p, Branch branch, RootSign sign_mu,
                         RootSign sign_nu) {
  if (!validate(p).pass) {
    throw Error(errc::constraint_violation, "basis_params: parameters fail validation");
  }
  const double mu2 = (1.0 - p.b) * (1.0 - p.b) + 4.0 * p.B / (p.r - 1.0);
  const double nu2 = (1.0 - p.a) * (1.0 - p.a) - 4.0 * p.A / p.r;

  BasisParams bp;
  bp.mu = signed_root(mu2, sign_mu, "mu");
  bp.nu = signed_root(nu2, sign_nu, "nu");
  bp.e0 = 0.5 * (bp.nu + 1.0 - p.a);
  bp.e1 = 0.5 * (bp.mu + 1.0 - p.b);
  bp.er = -0.5 * p.c;
  bp.delta = branch == Branch::Top ? 0.0 : p.d;
  bp.chi = 0.5 * (p.a + p.b + p.c);
  bp.branch = branch;
  return bp;
}

HahnFamily hahn_family(const CanonicalParams& p, const BasisParams& basis,
                       std::optional<double> lambda_choice) {
  const double sgn = branch_sign(basis.branch);
  HahnFamily fam;
  fam.zeta = 0.5 * (basis.mu + 1.0 + sgn * (p.b + p.r * p.c));
  fam.lambda = lambda_choice.value_or(fam.zeta);
  fam.sigma = -fam.lambda + basis.mu + 1.0;
  fam.tau = fam.lambda + 0.5 * (basis.nu - basis.mu) - sgn * basis.chi;
  fam.rho = -fam.lambda + 0.5 * (basis.mu + basis.nu) + 1.0 + sgn * basis.chi;
  fam.deform = 1.0 / p.d;
  fam.branch = basis.branch;
  fam.mu = basis.mu;
  fam.nu = basis.nu;
  fam.chi = basis.chi;
  fam.D = p.D;
  return fam;
}

double symmetric_lambda(const BasisParams& basis) {
  return 0.5 * (basis.mu + 1.0 + branch_sign(basis.branch) * basis.chi);
}

bool symmetric_case_check(const CanonicalParams& p) {
  if (!validate(p).pass) return false;
  const double lhs = p.A / p.r + p.B / (p.r - 1.0);
  const double rhs = 0.5 * (p.a - p.b) * (0.5 * (p.a + p.b) - 1.0);
  const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  if (std::fabs(lhs - rhs) > 1e-12 * scale) return false;

  const double mu2 = (1.0 - p.b) * (1.0 - p.b) + 4.0 * p.B / (p.r - 1.0);
  const double nu2 = (1.0 - p.a) * (1.0 - p.a) - 4.0 * p.A / p.r;
  if (mu2 < -1e-13 || nu2 < -1e-13) return false;
  const double mu = std::sqrt(std::max(mu2, 0.0));
  const double nu = std::sqrt(std::max(nu2, 0.0));
  return std::fabs(mu - nu) <= 1e-12 * std::max(1.0, std::fabs(mu));
}

}  // namespace tpode
