#pragma once

#include <vector>

#include "tpode/types.hpp"

namespace tpode {

// Jacobi polynomials in the shifted convention: argument on [0,1], weight
// proportional to x^nu (1-x)^mu, equal to the classical polynomial of the
// same indices at 2x - 1. Requires mu > -1, nu > -1.

// P_n^{(mu,nu)}(x) by forward three-term recursion. Throws degenerate_indices
// when a recursion denominator |2k+mu+nu| or |2k+mu+nu+2| falls below 1e-10
// (callers perturb parameters instead of relying on the removable limit).
double jacobi_eval(int n, double mu, double nu, double x);

// First derivative on the open interval, from the identity
//   x(1-x) P_n' = (n+mu+nu+1) [ ... P_n, P_{n-1}, P_{n+1} ... ]
// divided by x(1-x). Endpoints are rejected (endpoint_evaluation).
double jacobi_deriv(int n, double mu, double nu, double x);

// Second derivative on the open interval, eliminated through the defining ODE
//   x(1-x) P'' + [nu+1 - x(mu+nu+2)] P' + n(n+mu+nu+1) P = 0.
double jacobi_second_deriv(int n, double mu, double nu, double x);

// Residual of the defining ODE at x; near zero for consistent inputs.
double jacobi_ode_residual(int n, double mu, double nu, double x);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss rule for weight x^nu (1-x)^mu on [0,1]: nodes are the zeros
// of P_n^{(mu,nu)}, weights the Christoffel numbers, exact through degree
// 2n-1. Built from the recurrence coefficients via the symmetric tridiagonal
// eigenproblem.
QuadratureRule gauss_jacobi(int n, double mu, double nu);

}  // namespace tpode
