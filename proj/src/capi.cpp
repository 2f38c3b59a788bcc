#include "tpode.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tpode/canonical.hpp"
#include "tpode/coefficients.hpp"
#include "tpode/params.hpp"
#include "tpode/series.hpp"
#include "tpode/spectral.hpp"
#include "tpode/verify.hpp"

namespace {

thread_local std::string g_last_error;

tpode_status status_of(tpode::errc code) {
  using tpode::errc;
  switch (code) {
    case errc::invalid_argument: return TPODE_ERR_INVALID_ARGUMENT;
    case errc::degenerate_roots: return TPODE_ERR_DEGENERATE_ROOTS;
    case errc::invalid_r: return TPODE_ERR_INVALID_R;
    case errc::constraint_violation: return TPODE_ERR_CONSTRAINT_VIOLATION;
    case errc::complex_index: return TPODE_ERR_COMPLEX_INDEX;
    case errc::index_out_of_range: return TPODE_ERR_INDEX_OUT_OF_RANGE;
    case errc::degenerate_indices: return TPODE_ERR_DEGENERATE_INDICES;
    case errc::breakdown: return TPODE_ERR_BREAKDOWN;
    case errc::pole_in_sum: return TPODE_ERR_POLE_IN_SUM;
    case errc::endpoint_evaluation: return TPODE_ERR_ENDPOINT_EVALUATION;
    case errc::near_singular_point: return TPODE_ERR_NEAR_SINGULAR_POINT;
    case errc::stiffness_failure: return TPODE_ERR_STIFFNESS_FAILURE;
    case errc::not_symmetrizable: return TPODE_ERR_NOT_SYMMETRIZABLE;
    case errc::deformed_measure_unknown: return TPODE_ERR_DEFORMED_MEASURE_UNKNOWN;
    case errc::numerical_failure: return TPODE_ERR_NUMERICAL_FAILURE;
  }
  return TPODE_ERR_UNKNOWN;
}

template <typename Fn>
tpode_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const tpode::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TPODE_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return TPODE_ERR_UNKNOWN;
  }
}

tpode::CanonicalParams params_from(const double canon[10]) {
  tpode::CanonicalParams p;
  p.a = canon[0];
  p.b = canon[1];
  p.c = canon[2];
  p.d = canon[3];
  p.r = canon[4];
  p.A = canon[5];
  p.B = canon[6];
  p.C = canon[7];
  p.D = canon[8];
  p.E = canon[9];
  return p;
}

void params_to(const tpode::CanonicalParams& p, double canon[10]) {
  canon[0] = p.a;
  canon[1] = p.b;
  canon[2] = p.c;
  canon[3] = p.d;
  canon[4] = p.r;
  canon[5] = p.A;
  canon[6] = p.B;
  canon[7] = p.C;
  canon[8] = p.D;
  canon[9] = p.E;
}

tpode::RootSign sign_from(int s) {
  if (s != 1 && s != -1) {
    throw tpode::Error(tpode::errc::invalid_argument, "root sign must be +1 or -1");
  }
  return s > 0 ? tpode::RootSign::Plus : tpode::RootSign::Minus;
}

tpode::Branch branch_from(tpode_branch b) {
  if (b != TPODE_BRANCH_TOP && b != TPODE_BRANCH_BOTTOM) {
    throw tpode::Error(tpode::errc::invalid_argument, "invalid branch value");
  }
  return b == TPODE_BRANCH_TOP ? tpode::Branch::Top : tpode::Branch::Bottom;
}

}  // namespace

struct tpode_model {
  tpode::CanonicalParams params;
  tpode::BasisParams basis;
  tpode::HahnFamily family;
};

struct tpode_series {
  tpode::SeriesSolution solution;
};

namespace {

tpode_status model_create_impl(const tpode::CanonicalParams& p, tpode_branch branch,
                               int sign_mu, int sign_nu, const double* lambda_opt,
                               tpode_model** out) {
  if (!out) {
    throw tpode::Error(tpode::errc::invalid_argument, "model create: null out pointer");
  }
  auto model = std::make_unique<tpode_model>();
  model->params = p;
  model->basis =
      tpode::basis_params(p, branch_from(branch), sign_from(sign_mu), sign_from(sign_nu));
  std::optional<double> lambda;
  if (lambda_opt) lambda = *lambda_opt;
  model->family = tpode::hahn_family(p, model->basis, lambda);
  *out = model.release();
  return TPODE_OK;
}

}  // namespace

extern "C" {

const char* tpode_status_name(tpode_status status) {
  switch (status) {
    case TPODE_OK: return "ok";
    case TPODE_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case TPODE_ERR_DEGENERATE_ROOTS: return "degenerate-roots";
    case TPODE_ERR_INVALID_R: return "invalid-r";
    case TPODE_ERR_CONSTRAINT_VIOLATION: return "constraint-violation";
    case TPODE_ERR_COMPLEX_INDEX: return "complex-index";
    case TPODE_ERR_INDEX_OUT_OF_RANGE: return "index-out-of-range";
    case TPODE_ERR_DEGENERATE_INDICES: return "degenerate-indices";
    case TPODE_ERR_BREAKDOWN: return "breakdown";
    case TPODE_ERR_POLE_IN_SUM: return "pole-in-sum";
    case TPODE_ERR_ENDPOINT_EVALUATION: return "endpoint-evaluation";
    case TPODE_ERR_NEAR_SINGULAR_POINT: return "near-singular-point";
    case TPODE_ERR_STIFFNESS_FAILURE: return "stiffness-failure";
    case TPODE_ERR_NOT_SYMMETRIZABLE: return "not-symmetrizable";
    case TPODE_ERR_DEFORMED_MEASURE_UNKNOWN: return "deformed-measure-unknown";
    case TPODE_ERR_NUMERICAL_FAILURE: return "numerical-failure";
    case TPODE_ERR_UNKNOWN: break;
  }
  return "unknown";
}

const char* tpode_last_error(void) { return g_last_error.c_str(); }

tpode_status tpode_canonicalize(const double roots[3], double pi0, const double pi2[3],
                                const double pihat2[3], const double pi1[2],
                                double canon_out[10], double* shift, double* scale) {
  return guarded([&]() {
    if (!roots || !pi2 || !pihat2 || !pi1 || !canon_out) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_canonicalize: null pointer");
    }
    tpode::CubicOdeSpec spec;
    spec.roots = {roots[0], roots[1], roots[2]};
    spec.pi0 = pi0;
    spec.pi2 = {pi2[0], pi2[1], pi2[2]};
    spec.pihat2 = {pihat2[0], pihat2[1], pihat2[2]};
    spec.pi1 = {pi1[0], pi1[1]};
    const tpode::Canonicalization canon = tpode::canonicalize(spec);
    params_to(canon.params, canon_out);
    if (shift) *shift = canon.shift;
    if (scale) *scale = canon.scale;
    return TPODE_OK;
  });
}

tpode_status tpode_validate(const double canon[10], double residuals[TPODE_NUM_CONSTRAINTS],
                            int pass[TPODE_NUM_CONSTRAINTS]) {
  return guarded([&]() {
    if (!canon) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_validate: null pointer");
    }
    const tpode::ValidationReport rep = tpode::validate(params_from(canon));
    for (int i = 0; i < TPODE_NUM_CONSTRAINTS; ++i) {
      if (residuals) residuals[i] = rep.checks[i].residual;
      if (pass) pass[i] = rep.checks[i].pass ? 1 : 0;
    }
    if (!rep.pass) {
      g_last_error = "constraint violation";
      return TPODE_ERR_CONSTRAINT_VIOLATION;
    }
    return TPODE_OK;
  });
}

const char* tpode_constraint_name(int i) {
  static const char* const names[TPODE_NUM_CONSTRAINTS] = {
      "r > 1", "d != 0", "4A <= r(1-a)^2", "4B >= -(r-1)(1-b)^2",
      "4C = r(r-1)c(c-2)", "E identity"};
  if (i < 0 || i >= TPODE_NUM_CONSTRAINTS) return "";
  return names[i];
}

tpode_status tpode_derive_dependent(double a, double b, double c, double d, double r,
                                    double A, double B, double D, double* C_out,
                                    double* E_out) {
  return guarded([&]() {
    const auto [C, E] = tpode::derive_dependent(a, b, c, d, r, A, B, D);
    if (C_out) *C_out = C;
    if (E_out) *E_out = E;
    return TPODE_OK;
  });
}

tpode_status tpode_model_create(const double free_params[8], tpode_branch branch,
                                int sign_mu, int sign_nu, const double* lambda_opt,
                                tpode_model** out) {
  return guarded([&]() {
    if (!free_params) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_model_create: null pointer");
    }
    tpode::CanonicalParams p;
    p.a = free_params[0];
    p.b = free_params[1];
    p.c = free_params[2];
    p.d = free_params[3];
    p.r = free_params[4];
    p.A = free_params[5];
    p.B = free_params[6];
    p.D = free_params[7];
    std::tie(p.C, p.E) = tpode::derive_dependent(p.a, p.b, p.c, p.d, p.r, p.A, p.B, p.D);
    return model_create_impl(p, branch, sign_mu, sign_nu, lambda_opt, out);
  });
}

tpode_status tpode_model_create_full(const double canon[10], tpode_branch branch,
                                     int sign_mu, int sign_nu, const double* lambda_opt,
                                     tpode_model** out) {
  return guarded([&]() {
    if (!canon) {
      throw tpode::Error(tpode::errc::invalid_argument,
                         "tpode_model_create_full: null pointer");
    }
    return model_create_impl(params_from(canon), branch, sign_mu, sign_nu, lambda_opt, out);
  });
}

void tpode_model_free(tpode_model* model) { delete model; }

tpode_status tpode_model_params(const tpode_model* model, double canon_out[10]) {
  return guarded([&]() {
    if (!model || !canon_out) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_model_params: null pointer");
    }
    params_to(model->params, canon_out);
    return TPODE_OK;
  });
}

tpode_status tpode_model_basis(const tpode_model* model, double basis_out[7]) {
  return guarded([&]() {
    if (!model || !basis_out) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_model_basis: null pointer");
    }
    const tpode::BasisParams& b = model->basis;
    basis_out[0] = b.e0;
    basis_out[1] = b.e1;
    basis_out[2] = b.er;
    basis_out[3] = b.delta;
    basis_out[4] = b.mu;
    basis_out[5] = b.nu;
    basis_out[6] = b.chi;
    return TPODE_OK;
  });
}

tpode_status tpode_model_family(const tpode_model* model, double family_out[6]) {
  return guarded([&]() {
    if (!model || !family_out) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_model_family: null pointer");
    }
    const tpode::HahnFamily& f = model->family;
    family_out[0] = f.lambda;
    family_out[1] = f.tau;
    family_out[2] = f.rho;
    family_out[3] = f.sigma;
    family_out[4] = f.zeta;
    family_out[5] = f.deform;
    return TPODE_OK;
  });
}

int tpode_model_symmetric_case(const tpode_model* model) {
  if (!model) return 0;
  try {
    return tpode::symmetric_case_check(model->params) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

tpode_status tpode_coeff_table(const tpode_model* model, int N, double* lhs, double* diag,
                               double* sup, double* sub, double* an, double* cn, double* bn,
                               double* pn, double* equiv, int* rows_done) {
  return guarded([&]() -> tpode_status {
    if (!model || N < 0) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_coeff_table: bad arguments");
    }
    if (rows_done) *rows_done = 0;
    const double sgn = tpode::branch_sign(model->basis.branch);
    double p_prev = 0.0, p_cur = 1.0;
    for (int n = 0; n <= N; ++n) {
      try {
        const tpode::TraCoefficients tc =
            tpode::tra_coefficients(n, model->params, model->basis);
        const auto [An, Cn] = tpode::hahn_ac(n, model->family);
        const double Bn = tpode::hahn_bn(n, model->family);
        if (lhs) lhs[n] = tc.lhs;
        if (diag) diag[n] = tc.diag;
        if (sup) sup[n] = tc.sup;
        if (sub) sub[n] = tc.sub;
        if (an) an[n] = An;
        if (cn) cn[n] = Cn;
        if (bn) bn[n] = Bn;
        if (pn) pn[n] = p_cur;
        if (equiv) {
          const double mapped =
              model->family.zeta + An + Cn - sgn * model->family.deform * Bn;
          auto mixed = [](double x, double y) {
            return std::fabs(x - y) / std::max({1.0, std::fabs(x), std::fabs(y)});
          };
          equiv[n] = std::max({mixed(tc.lhs - tc.diag, mapped), mixed(tc.sup, An),
                               mixed(tc.sub, Cn)});
        }
        if (rows_done) *rows_done = n + 1;
        // Advance the polynomial value to degree n+1.
        if (std::fabs(An) < 1e-300) {
          throw tpode::Error(tpode::errc::breakdown,
                             "coeff table: A_n = 0 at n=" + std::to_string(n), n);
        }
        const double diag_n = -(An + Cn - sgn * model->family.deform * Bn);
        const double p_next =
            ((model->family.zeta - diag_n) * p_cur - Cn * p_prev) / An;
        p_prev = p_cur;
        p_cur = p_next;
      } catch (const tpode::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
      }
    }
    return TPODE_OK;
  });
}

tpode_status tpode_series_create(const tpode_model* model, int N, double margin,
                                 tpode_series** out) {
  return guarded([&]() {
    if (!model || !out || N < 0 || margin <= 0.0 || margin >= 0.5) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_series_create: bad arguments");
    }
    auto series = std::make_unique<tpode_series>();
    series->solution =
        tpode::make_series(model->params, model->basis, model->family, N, margin);
    *out = series.release();
    return TPODE_OK;
  });
}

void tpode_series_free(tpode_series* series) { delete series; }

tpode_status tpode_series_eval(const tpode_series* series, double x, int derivative_order,
                               double* out) {
  return guarded([&]() {
    if (!series || !out) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_series_eval: null pointer");
    }
    *out = tpode::series_eval(series->solution, x, derivative_order);
    return TPODE_OK;
  });
}

tpode_status tpode_series_coeff(const tpode_series* series, int n, double* out) {
  return guarded([&]() {
    if (!series || !out || n < 0 ||
        n >= static_cast<int>(series->solution.coeffs.values.size())) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_series_coeff: bad arguments");
    }
    *out = series->solution.coeffs.values[n];
    return TPODE_OK;
  });
}

tpode_status tpode_series_decay(const tpode_series* series, double lo, double hi,
                                int grid_count, double* term_peak, double* ratios,
                                int* tail_decaying) {
  return guarded([&]() {
    if (!series) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_series_decay: null pointer");
    }
    const tpode::DecayReport rep =
        tpode::coefficient_decay_report(series->solution, lo, hi, grid_count);
    if (term_peak) {
      std::memcpy(term_peak, rep.term_peak.data(), rep.term_peak.size() * sizeof(double));
    }
    if (ratios && !rep.ratios.empty()) {
      std::memcpy(ratios, rep.ratios.data(), rep.ratios.size() * sizeof(double));
    }
    if (tail_decaying) *tail_decaying = rep.tail_decaying ? 1 : 0;
    return TPODE_OK;
  });
}

tpode_status tpode_verify_tridiagonal(const tpode_model* model, int n_max, double lo,
                                      double hi, int grid_count, double* max_err) {
  return guarded([&]() {
    if (!model || !max_err || n_max < 0 || grid_count < 1) {
      throw tpode::Error(tpode::errc::invalid_argument,
                         "tpode_verify_tridiagonal: bad arguments");
    }
    const std::vector<double> grid = tpode::chebyshev_grid(grid_count, lo, hi);
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      worst = std::max(worst,
                       tpode::tridiagonal_identity_check(n, model->params, model->basis, grid));
    }
    *max_err = worst;
    return TPODE_OK;
  });
}

tpode_status tpode_verify_truncation(const tpode_series* series, double lo, double hi,
                                     int grid_count, double* max_err) {
  return guarded([&]() {
    if (!series || !max_err || grid_count < 1) {
      throw tpode::Error(tpode::errc::invalid_argument,
                         "tpode_verify_truncation: bad arguments");
    }
    const std::vector<double> grid = tpode::chebyshev_grid(grid_count, lo, hi);
    *max_err = tpode::truncation_residual_check(series->solution, grid);
    return TPODE_OK;
  });
}

tpode_status tpode_verify_limit(const tpode_model* model, const double* d_values, int num_d,
                                int n_max, double* errors, double* slope) {
  return guarded([&]() {
    if (!model || !d_values || num_d < 3 || n_max < 0) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_verify_limit: bad arguments");
    }
    const tpode::LimitReport rep =
        tpode::limit_check(model->params, model->basis, n_max,
                           std::span<const double>(d_values, static_cast<size_t>(num_d)));
    if (errors) {
      std::memcpy(errors, rep.errors.data(), rep.errors.size() * sizeof(double));
    }
    if (slope) *slope = rep.slope;
    return TPODE_OK;
  });
}

tpode_status tpode_verify_integrator(const tpode_series* series, double lo, double hi,
                                     int checkpoints, double tol, double* max_err) {
  return guarded([&]() {
    if (!series || !max_err || checkpoints < 1) {
      throw tpode::Error(tpode::errc::invalid_argument,
                         "tpode_verify_integrator: bad arguments");
    }
    *max_err = tpode::integrator_series_check(series->solution, lo, hi, checkpoints, tol);
    return TPODE_OK;
  });
}

tpode_status tpode_spectral_zeros(const tpode_model* model, int N, double* re, double* im) {
  return guarded([&]() {
    if (!model || !re || !im) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_spectral_zeros: null pointer");
    }
    const auto zs = tpode::zeros(N, model->family);
    for (int i = 0; i < N; ++i) {
      re[i] = zs[i].real();
      im[i] = zs[i].imag();
    }
    return TPODE_OK;
  });
}

tpode_status tpode_spectral_zline(const tpode_model* model, int N, double* nodes,
                                  double* weights) {
  return guarded([&]() {
    if (!model || !nodes || !weights) {
      throw tpode::Error(tpode::errc::invalid_argument, "tpode_spectral_zline: null pointer");
    }
    tpode::HahnFamily fam =
        tpode::hahn_family(model->params, model->basis, tpode::symmetric_lambda(model->basis));
    fam.deform = 0.0;
    const tpode::GaussMeasure gm = tpode::gauss_measure(N, fam);
    std::memcpy(nodes, gm.nodes.data(), gm.nodes.size() * sizeof(double));
    std::memcpy(weights, gm.weights.data(), gm.weights.size() * sizeof(double));
    return TPODE_OK;
  });
}

}  // extern "C"
