#include "heunkit/series.hpp"

#include <algorithm>
#include <cmath>

namespace heunkit {

const char* errc_name(errc e) noexcept {
  switch (e) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::domain_error: return "domain-error";
    case errc::no_convergence: return "no-convergence";
    case errc::shape_error: return "shape-error";
    case errc::degenerate_error: return "degenerate-error";
    case errc::puncture_error: return "puncture-error";
    case errc::singular_map: return "singular-map";
    case errc::pole_at_sample: return "pole-at-sample";
    case errc::missing_column: return "missing-column";
    case errc::inconsistent_branching: return "inconsistent-branching";
    case errc::closure_error: return "closure-error";
    case errc::zero_leading_coefficient: return "zero-leading-coefficient";
    case errc::usage_error: return "usage-error";
  }
  return "unknown-error";
}

bool is_near_integer(Complex z, double tol) noexcept {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

bool is_nonpositive_integer(Complex z, double tol) noexcept {
  return is_near_integer(z, tol) && z.real() <= tol;
}

bool complex_less(Complex u, Complex v) noexcept {
  if (u.real() != v.real()) return u.real() < v.real();
  return u.imag() < v.imag();
}

void GaussParams::validate() const {
  if (is_nonpositive_integer(gamma))
    fail(errc::invalid_parameter, "2F1 lower parameter is a nonpositive integer");
}

void HeunParams::validate() const {
  if (std::abs(a) <= integer_guard_tol || std::abs(a - 1.0) <= integer_guard_tol)
    fail(errc::invalid_parameter, "Heun singularity location a must avoid {0, 1}");
  if (is_nonpositive_integer(gamma))
    fail(errc::invalid_parameter, "Heun parameter gamma is a nonpositive integer");
}

void ThreeF2Params::validate() const {
  if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2))
    fail(errc::invalid_parameter, "3F2 lower parameter is a nonpositive integer");
}

void EvalPolicy::validate() const {
  if (max_terms < 8) fail(errc::invalid_parameter, "max_terms must be at least 8");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    fail(errc::invalid_parameter, "tolerances must be positive");
  if (!(domain_margin > 0.0) || !(domain_margin < 1.0))
    fail(errc::invalid_parameter, "domain_margin must lie in (0, 1)");
}

CoefficientSequence gauss_coeffs(const GaussParams& p, std::size_t n_max) {
  p.validate();
  CoefficientSequence out;
  out.source = "gauss";
  out.coeffs.resize(n_max + 1);
  out.coeffs[0] = 1.0;
  for (std::size_t n = 0; n < n_max; ++n) {
    const Complex nn(static_cast<double>(n), 0.0);
    const Complex lead = (nn + p.gamma) * (nn + 1.0);
    if (std::abs(lead) <= integer_guard_tol)
      fail(errc::invalid_parameter, "2F1 recurrence leading coefficient vanished");
    out.coeffs[n + 1] = out.coeffs[n] * (nn + p.alpha) * (nn + p.beta) / lead;
  }
  return out;
}

CoefficientSequence heun_coeffs(const HeunParams& p, std::size_t n_max) {
  p.validate();
  const Complex eps = p.epsilon();
  CoefficientSequence out;
  out.source = "heun";
  out.coeffs.resize(n_max + 1);
  out.coeffs[0] = 1.0;
  // The m = 1 step is the n = -1 instance of the recurrence with c(-1) = 0.
  Complex prev = 0.0;  // c(m-2), seeded with c(-1)
  for (std::size_t m = 1; m <= n_max; ++m) {
    const Complex n(static_cast<double>(m) - 2.0, 0.0);
    const Complex lead = (n + p.gamma + 1.0) * (n + 2.0) * p.a;
    if (std::abs(lead) <= integer_guard_tol)
      fail(errc::invalid_parameter, "Heun recurrence leading coefficient vanished");
    const Complex mid =
        (n + 1.0) * (n + p.gamma + p.delta) * p.a + (n + 1.0) * (n + p.gamma + eps) + p.q;
    const Complex sub = (n + p.alpha) * (n + p.beta);
    const Complex cur = out.coeffs[m - 1];
    out.coeffs[m] = (mid * cur - sub * prev) / lead;
    prev = cur;
  }
  return out;
}

CoefficientSequence p3f2_coeffs(const ThreeF2Params& p, std::size_t n_max) {
  p.validate();
  CoefficientSequence out;
  out.source = "3f2";
  out.coeffs.resize(n_max + 1);
  out.coeffs[0] = 1.0;
  for (std::size_t n = 0; n < n_max; ++n) {
    const Complex nn(static_cast<double>(n), 0.0);
    const Complex lead = (nn + p.b1) * (nn + p.b2) * (nn + 1.0);
    if (std::abs(lead) <= integer_guard_tol)
      fail(errc::invalid_parameter, "3F2 recurrence leading coefficient vanished");
    out.coeffs[n + 1] = out.coeffs[n] * (nn + p.a1) * (nn + p.a2) * (nn + p.a3) / lead;
  }
  return out;
}

EvalResult eval_series(const CoefficientSequence& c, Complex x, double radius,
                       const EvalPolicy& policy) {
  policy.validate();
  if (c.coeffs.empty()) fail(errc::invalid_parameter, "empty coefficient sequence");
  if (!(std::abs(x) < radius * (1.0 - policy.domain_margin)))
    fail(errc::domain_error, "evaluation point too close to the convergence boundary");

  Complex sum = 0.0;
  Complex xn = 1.0;
  std::size_t small_streak = 0;
  // |term| history for the geometric tail bound.
  double mags[6] = {0, 0, 0, 0, 0, 0};
  std::size_t n = 0;
  const std::size_t limit = std::min(c.coeffs.size(), policy.max_terms);
  for (; n < limit; ++n) {
    const Complex term = c.coeffs[n] * xn;
    sum += term;
    xn *= x;
    const double mag = std::abs(term);
    for (int i = 0; i < 5; ++i) mags[i] = mags[i + 1];
    mags[5] = mag;
    if (mag < policy.abs_tol && mag < policy.rel_tol * std::abs(sum)) {
      if (++small_streak == 3) {
        double rho = 0.0;
        for (int i = 1; i < 6; ++i)
          if (mags[i - 1] > 0.0) rho = std::max(rho, mags[i] / mags[i - 1]);
        rho = std::min(rho, 0.99);
        return {sum, mag / (1.0 - rho), n + 1};
      }
    } else {
      small_streak = 0;
    }
  }
  fail(errc::no_convergence, "tail criterion not met within max_terms");
}

EvalResult eval_2f1(const GaussParams& p, Complex x, const EvalPolicy& policy) {
  return eval_series(gauss_coeffs(p, policy.max_terms), x, 1.0, policy);
}

EvalResult eval_hl(const HeunParams& p, Complex x, const EvalPolicy& policy) {
  const double radius = std::min(1.0, std::abs(p.a));
  return eval_series(heun_coeffs(p, policy.max_terms), x, radius, policy);
}

EvalResult eval_3f2(const ThreeF2Params& p, Complex x, const EvalPolicy& policy) {
  return eval_series(p3f2_coeffs(p, policy.max_terms), x, 1.0, policy);
}

CoefficientSequence series_derivative(const CoefficientSequence& c, std::size_t n) {
  if (c.coeffs.size() <= n)
    fail(errc::invalid_parameter, "not enough coefficients for the requested derivative");
  CoefficientSequence out;
  out.source = c.source + "'";
  out.coeffs.resize(c.coeffs.size() - n);
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    double fac = 1.0;
    for (std::size_t j = 1; j <= n; ++j) fac *= static_cast<double>(k + j);
    out.coeffs[k] = c.coeffs[k + n] * fac;
  }
  return out;
}

Complex principal_power(Complex base, Complex exponent) {
  if (base == Complex(0.0, 0.0))
    fail(errc::domain_error, "power prefactor evaluated at its branch point");
  return std::exp(exponent * std::log(base));
}

}
