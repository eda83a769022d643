#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "heunkit/error.hpp"

namespace heunkit {

using Complex = std::complex<double>;

// Tolerance for "is (numerically) a nonpositive integer" tests on parameters.
inline constexpr double integer_guard_tol = 1e-8;

// Tolerance for P-symbol location comparisons.
inline constexpr double location_tol = 1e-10;

bool is_nonpositive_integer(Complex z, double tol = integer_guard_tol) noexcept;
bool is_near_integer(Complex z, double tol = integer_guard_tol) noexcept;

// Lexicographic order on (re, im); the canonical order used whenever a pair
// of parameters has no intrinsic order (e.g. the two numerator parameters of
// a hypergeometric series).
bool complex_less(Complex u, Complex v) noexcept;

// --- parameter packs ------------------------------------------------------

// 2F1(alpha, beta; gamma; x), normalized to 1 at x = 0.
struct GaussParams {
  Complex alpha;
  Complex beta;
  Complex gamma;

  void validate() const;
};

// Local Heun function Hl(a, q; alpha, beta; gamma, delta; x), normalized to
// 1 at x = 0.  The exponent parameter at the singular point x = a is derived:
// epsilon = alpha + beta - gamma - delta + 1, so the exponent sum is always 2.
struct HeunParams {
  Complex a;
  Complex q;
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex delta;

  Complex epsilon() const noexcept { return alpha + beta - gamma - delta + 1.0; }
  void validate() const;
};

// 3F2(a1, a2, a3; b1, b2; x), normalized to 1 at x = 0.
struct ThreeF2Params {
  Complex a1;
  Complex a2;
  Complex a3;
  Complex b1;
  Complex b2;

  void validate() const;
};

// --- series evaluation ----------------------------------------------------

struct EvalPolicy {
  std::size_t max_terms = 4096;
  double abs_tol = 1e-14;
  double rel_tol = 1e-14;
  // Evaluation is refused within this relative margin of the convergence
  // radius; error estimates degrade badly near the boundary.
  double domain_margin = 0.05;

  void validate() const;
};

// Taylor coefficients c(0..n) of a series about x = 0 together with a tag
// recording which recurrence produced them.
struct CoefficientSequence {
  std::vector<Complex> coeffs;
  std::string source;

  std::size_t size() const noexcept { return coeffs.size(); }
  Complex operator[](std::size_t n) const { return coeffs[n]; }
};

struct EvalResult {
  Complex value;
  double err_estimate;
  std::size_t terms_used;
};

}
