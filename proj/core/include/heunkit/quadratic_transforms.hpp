#pragma once

#include "heunkit/psymbol.hpp"
#include "heunkit/series.hpp"
#include "heunkit/types.hpp"

namespace heunkit {

// Data of the degree-2 substitution R(x) = A x (a - x) / (1 - x) carrying a
// Heun equation with singularity a onto one with singularity a_prime.  The
// pair (a, a_prime) must lie on the curve a^2 (1 - a')^2 = 16 (1 - a) a',
// and then A = (1 + a') / (2 (2 - a)).
struct QuadraticLiftData {
  Complex a;
  Complex a_prime;
  Complex scale;
};

// a^2 (1 - a')^2 - 16 (1 - a) a'.
Complex quadratic_constraint_residual(Complex a, Complex a_prime);

// Rational parametrization of the constraint curve:
// a = t(t+8)/(t+4)^2, a' = t^2/(t+8)^2, A = ((t+4)/(t+8))^2.
// The punctures t in {0, -4, -8} (and infinity) are excluded.
QuadraticLiftData lift_from_t(Complex t);

Complex quad_map_r(const QuadraticLiftData& d, Complex x);

// Residual of
//   Hl(a, q; 2 alpha, gamma; gamma, 2 alpha - gamma + 1; x)
//     = (1-x)^(-alpha) Hl(a', A(q - gamma alpha a);
//                         alpha, gamma - alpha; gamma, 1/2; R(x)).
double quadratic_rule_residual(const QuadraticLiftData& d, Complex alpha, Complex gamma,
                               Complex q, Complex x, const EvalPolicy& policy = {});

// The degree-4 substitution S(x) = 4 a x (1-x)(a-x) / (a - x^2)^2, which
// carries singularity set {0, 1, a, inf} onto itself.
Complex biquad_map_s(Complex a, Complex x);

// Residual of
//   Hl(a, q; 2 gamma - 1, gamma; gamma, gamma; x)
//     = (1 - x^2/a)^(-gamma + 1/2) Hl(a, q/4;
//         gamma/2 - 1/4, gamma/2 + 1/4; gamma, 1/2; S(x)).
double biquadratic_rule_residual(Complex a, Complex q, Complex gamma, Complex x,
                                 const EvalPolicy& policy = {});

// Residual of the argument-duplication identity H(a, q; x) = H(a, q/4; S(x))
// for H(a, q; x) = Hl(a, q; 0, 1/2; 1/2, 1/2; x).
double h_duplication_residual(Complex a, Complex q, Complex x,
                              const EvalPolicy& policy = {});

// Branch tables of the two substitutions over their marked image points,
// from the closed-form critical points.
RationalMap quad_map_descriptor(const QuadraticLiftData& d);
RationalMap biquad_map_descriptor(Complex a);

}
