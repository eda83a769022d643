#pragma once

#include <vector>

#include "heunkit/series.hpp"
#include "heunkit/types.hpp"

namespace heunkit {

// A point of the one-parameter family along which the local Heun function
// collapses to a 3F2 sum.  With epsilon = -1 (so delta = alpha+beta-gamma+2)
// and
//
//   a = e (e - gamma + 1) / ((e - alpha)(e - beta)),
//   q = alpha beta (e + 1)(e - gamma + 1) / ((e - alpha)(e - beta)),
//
// one has Hl(a, q; alpha, beta; gamma, delta; x) = 3F2(alpha, beta, e+1;
// gamma, e; x).
struct ApparentCurvePoint {
  Complex e;
  Complex alpha, beta, gamma;
  HeunParams heun;
  ThreeF2Params f32;
};

// Builds the point from (alpha, beta, gamma, e).  The parametrization has
// punctures at e in {0, gamma-1, alpha, beta, alpha beta/(alpha+beta-gamma+1)};
// values within 1e-6 of one raise puncture_error.
ApparentCurvePoint curve_point(Complex alpha, Complex beta, Complex gamma, Complex e);

// q^2 + [(gamma - 1) - (2 alpha beta + alpha + beta) a] q
//     + alpha beta a [(alpha beta + alpha + beta + 1) a - gamma];
// vanishes exactly when (a, q) lies on the reduction curve for the given
// (alpha, beta, gamma).
Complex curve_residual(const HeunParams& p);

// The same constraint written in the frame of the local solution at x = a,
// where a' = (a-1)/a, q' = (alpha beta a - q)/a and the roles of gamma and
// delta rotate:  q'^2 + [(alpha+beta-gamma+1) + (gamma-1) a'] q'
// + alpha beta a'.
Complex relabeled_curve_residual(const HeunParams& p);

// On the curve the local solution at x = a has local gamma equal to -1, so
// the row of its coefficient recurrence that would determine the order-2
// coefficient is multiplied by zero and degenerates to a consistency
// condition.  Returns that row's residual (normalized); zero certifies that
// the series meets no obstruction at x = a.  Requires epsilon within 1e-8
// of -1.
double apparent_singularity_residual(const HeunParams& p);

// The collapsed function evaluated through each of its closed forms.
EvalResult eval_g(const ApparentCurvePoint& p, Complex x, const EvalPolicy& policy = {});
EvalResult eval_g_heun(const ApparentCurvePoint& p, Complex x, const EvalPolicy& policy = {});

// G = 2F1(alpha, beta; gamma; x) + (x/e) d/dx 2F1(alpha, beta; gamma; x),
// with the derivative taken through the contiguous 2F1(alpha+1, beta+1;
// gamma+1).
Complex g_via_derivative(const ApparentCurvePoint& p, Complex x,
                         const EvalPolicy& policy = {});

// G = [(e - gamma + 1)/e] 2F1(alpha, beta; gamma; x)
//   + [(gamma - 1)/e]     2F1(alpha, beta; gamma - 1; x).
Complex g_via_contiguous(const ApparentCurvePoint& p, Complex x,
                         const EvalPolicy& policy = {});

// Both representations at once; r1 is the derivative form, r2 the contiguous
// form.  Requires e != 0 and gamma - 1 not a nonpositive integer.
struct GTwoRepresentations {
  Complex r1;
  Complex r2;
};
GTwoRepresentations g_two_representations(const ApparentCurvePoint& p, Complex x,
                                          const EvalPolicy& policy = {});

// Relative residual of the contiguous relation behind the split above,
// stated for a general 3F2:
//   F(a3+1) = [(a3 - b1 + 1)/a3] F + [(b1 - 1)/a3] F(b1-1).
double contiguity_residual(const ThreeF2Params& p, Complex x,
                           const EvalPolicy& policy = {});

// The coefficient recurrence of Hl on the curve factors into two first-order
// shift operators:
//
//   (n+e+1)^{-1} [a E - 1] [(n+gamma)(n+e)(n+1) E - (n+alpha)(n+beta)(n+e+1)].
//
// Returns the largest normalized mismatch between the three shift
// coefficients of this product and those of the series recurrence, over the
// given integer samples of n (each coefficient has polynomial degree <= 3 in
// n, so seven samples over-determine the comparison).  The _at forms
// substitute a foreign (a, q) into both sides' equation data, which breaks
// the match everywhere off the curve.  Samples with |n + e + 1| <= 1e-8
// raise pole_at_sample.
double difference_factorization_residual(const ApparentCurvePoint& p,
                                         const std::vector<int>& n_samples);
double difference_factorization_residual_at(const ApparentCurvePoint& p,
                                            const std::vector<int>& n_samples,
                                            Complex a, Complex q);
double difference_factorization_residual_at(const ApparentCurvePoint& p, Complex n,
                                            Complex a, Complex q);

// Differential counterpart, checked exactly on polynomial coefficients.
// With N_k the cleared Heun operator applied to x^k, P = x(x-1)(x-a) and
// W = (e+1)(x-1)(x-a) + x(x-a) + x(x-1), the identity
//
//   P N_k' - P' N_k + W N_k  =  M_k (x-1)(x-a)^2
//
// holds for every k >= 0, where M_k is the cleared operator of
// 3F2(alpha, beta, e+1; gamma, e) applied to x^k.  Returns the largest
// normalized coefficient mismatch between the two sides over k = 0..k_max.
double differential_factorization_residual(const ApparentCurvePoint& p, int k_max);
double differential_factorization_residual_at(const ApparentCurvePoint& p, int k_max,
                                              Complex a, Complex q);

}
