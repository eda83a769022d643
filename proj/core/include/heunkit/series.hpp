#pragma once

#include "heunkit/types.hpp"

namespace heunkit {

// Coefficients of 2F1(alpha, beta; gamma; x) from the two-term recurrence
//
//   (n + gamma)(n + 1) c(n+1) = (n + alpha)(n + beta) c(n),   c(0) = 1.
//
// Throws invalid_parameter when gamma is a nonpositive integer (a leading
// coefficient would vanish before n_max).
CoefficientSequence gauss_coeffs(const GaussParams& p, std::size_t n_max);

// Coefficients of Hl(a, q; alpha, beta; gamma, delta; x) from the three-term
// recurrence
//
//   (n + gamma + 1)(n + 2) a c(n+2)
//     = [(n+1)(n + gamma + delta) a + (n+1)(n + gamma + epsilon) + q] c(n+1)
//       - (n + alpha)(n + beta) c(n),
//
// with c(0) = 1, c(-1) = 0; in particular c(1) = q / (gamma a).
CoefficientSequence heun_coeffs(const HeunParams& p, std::size_t n_max);

// Coefficients of 3F2(a1, a2, a3; b1, b2; x) from
//
//   (n + b1)(n + b2)(n + 1) d(n+1) = (n + a1)(n + a2)(n + a3) d(n).
CoefficientSequence p3f2_coeffs(const ThreeF2Params& p, std::size_t n_max);

// Sums sum c(n) x^n with the tail-based stopping rule: stop once
// |term| < abs_tol and |term| < rel_tol * |partial| for three consecutive
// terms; the error estimate is |last term| / (1 - rho) with rho the largest
// consecutive-term ratio over the final five terms, clamped to 0.99.
// radius is the convergence radius of the series; points with
// |x| >= radius * (1 - policy.domain_margin) are refused (domain_error).
EvalResult eval_series(const CoefficientSequence& c, Complex x, double radius,
                       const EvalPolicy& policy = {});

// Convergence radii: 1 for 2F1 and 3F2, min(1, |a|) for Hl.
EvalResult eval_2f1(const GaussParams& p, Complex x, const EvalPolicy& policy = {});
EvalResult eval_hl(const HeunParams& p, Complex x, const EvalPolicy& policy = {});
EvalResult eval_3f2(const ThreeF2Params& p, Complex x, const EvalPolicy& policy = {});

// Coefficients of the N-th derivative: k -> c(k+N) * (k+N)! / k!.
CoefficientSequence series_derivative(const CoefficientSequence& c, std::size_t n);

// Principal-branch power (1 - x/s)^mu used by transformation prefactors.
Complex principal_power(Complex base, Complex exponent);

}
