/* C interface to the tpode library.
 *
 * All numerical state lives behind opaque handles; every function returns a
 * tpode_status and writes results through out-parameters. Thread safety: a
 * handle may be shared across threads for read-only calls; creation and
 * destruction are not synchronized. tpode_last_error() is thread-local.
 *
 * Canonical parameter order used throughout: a, b, c, d, r, A, B, C, D, E.
 */
#ifndef TPODE_H
#define TPODE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tpode_status {
  TPODE_OK = 0,
  TPODE_ERR_INVALID_ARGUMENT = 1,
  TPODE_ERR_DEGENERATE_ROOTS = 2,
  TPODE_ERR_INVALID_R = 3,
  TPODE_ERR_CONSTRAINT_VIOLATION = 4,
  TPODE_ERR_COMPLEX_INDEX = 5,
  TPODE_ERR_INDEX_OUT_OF_RANGE = 6,
  TPODE_ERR_DEGENERATE_INDICES = 7,
  TPODE_ERR_BREAKDOWN = 8,
  TPODE_ERR_POLE_IN_SUM = 9,
  TPODE_ERR_ENDPOINT_EVALUATION = 10,
  TPODE_ERR_NEAR_SINGULAR_POINT = 11,
  TPODE_ERR_STIFFNESS_FAILURE = 12,
  TPODE_ERR_NOT_SYMMETRIZABLE = 13,
  TPODE_ERR_DEFORMED_MEASURE_UNKNOWN = 14,
  TPODE_ERR_NUMERICAL_FAILURE = 15,
  TPODE_ERR_UNKNOWN = 16
} tpode_status;

typedef enum tpode_branch {
  TPODE_BRANCH_TOP = 0,    /* delta = 0 */
  TPODE_BRANCH_BOTTOM = 1  /* delta = d */
} tpode_branch;

/* Short name of a status code ("ok", "breakdown", ...). */
const char* tpode_status_name(tpode_status status);

/* Message of the last error raised on this thread; empty string if none. */
const char* tpode_last_error(void);

/* ---- canonical reduction ------------------------------------------- */

/* Reduce a cubic-leading-coefficient equation to canonical form.
 * roots: the three real roots (any order); pi2/pihat2: quadratic
 * coefficients ascending; pi1: linear coefficients ascending.
 * canon_out receives the ten canonical parameters in standard order. */
tpode_status tpode_canonicalize(const double roots[3], double pi0, const double pi2[3],
                                const double pihat2[3], const double pi1[2],
                                double canon_out[10], double* shift, double* scale);

/* ---- parameter validation ------------------------------------------ */

#define TPODE_NUM_CONSTRAINTS 6

/* Per-constraint residuals and pass flags for the ten canonical parameters.
 * Returns TPODE_OK when all constraints hold, TPODE_ERR_CONSTRAINT_VIOLATION
 * otherwise. residuals/pass may be NULL. */
tpode_status tpode_validate(const double canon[10], double residuals[TPODE_NUM_CONSTRAINTS],
                            int pass[TPODE_NUM_CONSTRAINTS]);

/* Name of constraint i in [0, TPODE_NUM_CONSTRAINTS). */
const char* tpode_constraint_name(int i);

/* Dependent parameters C and E from the eight free ones. */
tpode_status tpode_derive_dependent(double a, double b, double c, double d, double r,
                                    double A, double B, double D, double* C_out,
                                    double* E_out);

/* ---- model handle ---------------------------------------------------- */

typedef struct tpode_model tpode_model;

/* Build a model from the eight free parameters (a,b,c,d,r,A,B,D); C and E
 * are derived. sign_mu/sign_nu: +1 or -1 root choice for the Jacobi indices.
 * lambda_opt: optional pointer to an explicit lambda (NULL for the default
 * lambda = zeta). */
tpode_status tpode_model_create(const double free_params[8], tpode_branch branch,
                                int sign_mu, int sign_nu, const double* lambda_opt,
                                tpode_model** out);

/* Same, from all ten parameters; C and E are validated instead of derived. */
tpode_status tpode_model_create_full(const double canon[10], tpode_branch branch,
                                     int sign_mu, int sign_nu, const double* lambda_opt,
                                     tpode_model** out);

void tpode_model_free(tpode_model* model);

/* The ten canonical parameters in standard order. */
tpode_status tpode_model_params(const tpode_model* model, double canon_out[10]);

/* Basis data: e0, e1, er, delta, mu, nu, chi. */
tpode_status tpode_model_basis(const tpode_model* model, double basis_out[7]);

/* Family data: lambda, tau, rho, sigma, zeta, deform. */
tpode_status tpode_model_family(const tpode_model* model, double family_out[6]);

/* 1 when the symmetric-case restriction holds (mu = nu), else 0. */
int tpode_model_symmetric_case(const tpode_model* model);

/* ---- coefficients ---------------------------------------------------- */

/* Fill per-degree recursion data for n = 0..N. Arrays must hold N+1 values;
 * any pointer may be NULL to skip that column.
 *   lhs:   constant left-hand coefficient (same value each row)
 *   diag/sup/sub: expansion-coefficient recursion coefficients
 *   an/cn/bn:     continuous-Hahn recursion data
 *   pn:    polynomial values at zeta with p_0 = 1
 *   equiv: per-degree discrepancy between the two coefficient routes
 * On breakdown, rows 0..*rows_done-1 are valid and the status reports the
 * failure. */
tpode_status tpode_coeff_table(const tpode_model* model, int N, double* lhs, double* diag,
                               double* sup, double* sub, double* an, double* cn, double* bn,
                               double* pn, double* equiv, int* rows_done);

/* ---- series ----------------------------------------------------------- */

typedef struct tpode_series tpode_series;

/* Truncated series of order N; evaluation is restricted to
 * [margin, 1-margin]. */
tpode_status tpode_series_create(const tpode_model* model, int N, double margin,
                                 tpode_series** out);

void tpode_series_free(tpode_series* series);

/* Value (order 0) or derivative (order 1, 2) at x. */
tpode_status tpode_series_eval(const tpode_series* series, double x, int derivative_order,
                               double* out);

/* Expansion coefficient f_n, n <= N+1. */
tpode_status tpode_series_coeff(const tpode_series* series, int n, double* out);

/* Per-term peak magnitudes over a uniform grid (term_peak: N+1 values) and
 * successive-peak ratios (ratios: N values). Either may be NULL. */
tpode_status tpode_series_decay(const tpode_series* series, double lo, double hi,
                                int grid_count, double* term_peak, double* ratios,
                                int* tail_decaying);

/* ---- verification ----------------------------------------------------- */

/* Max relative defect of the tridiagonal operator identity over n <= n_max
 * on a Chebyshev grid of grid_count points in (lo, hi). */
tpode_status tpode_verify_tridiagonal(const tpode_model* model, int n_max, double lo,
                                      double hi, int grid_count, double* max_err);

/* Max relative defect of the truncation-residual identity for the series. */
tpode_status tpode_verify_truncation(const tpode_series* series, double lo, double hi,
                                     int grid_count, double* max_err);

/* Deformation-limit diagnostic over the given d values (at least 3,
 * increasing): per-d errors vs the terminating-sum reference for n <= n_max,
 * plus the log-log slope. errors may be NULL. */
tpode_status tpode_verify_limit(const tpode_model* model, const double* d_values,
                                int num_d, int n_max, double* errors, double* slope);

/* Independent adaptive-integrator cross-check of the series on [lo, hi]
 * against checkpoints points per side, integrating from the midpoint. */
tpode_status tpode_verify_integrator(const tpode_series* series, double lo, double hi,
                                     int checkpoints, double tol, double* max_err);

/* ---- spectral data ----------------------------------------------------- */

/* The N zeros of the degree-N polynomial in the zeta plane (re/im arrays of
 * length N), sorted by real part. N <= 60. */
tpode_status tpode_spectral_zeros(const tpode_model* model, int N, double* re, double* im);

/* Gauss data of the symmetric undeformed reduction: N real nodes (zeros in
 * z) and weights summing to 1. Fails with TPODE_ERR_DEFORMED_MEASURE_UNKNOWN
 * or TPODE_ERR_NOT_SYMMETRIZABLE when the reduction does not apply; the
 * model is evaluated with deformation 0 and the symmetric lambda. */
tpode_status tpode_spectral_zline(const tpode_model* model, int N, double* nodes,
                                  double* weights);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TPODE_H */
