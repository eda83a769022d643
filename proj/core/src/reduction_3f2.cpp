#include "heunkit/reduction_3f2.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "heunkit/error.hpp"

namespace heunkit {

namespace {

constexpr double kPunctureTol = 1e-6;

double rel_diff(Complex u, Complex v) {
  const double scale = std::max({std::abs(u), std::abs(v), 1.0});
  return std::abs(u - v) / scale;
}

// Dense polynomial in one variable with complex coefficients, enough for the
// exact coefficient comparisons below.
struct Poly {
  std::vector<Complex> c;  // c[i] multiplies x^i

  static Poly monomial(int degree, Complex coef) {
    Poly p;
    p.c.assign(static_cast<std::size_t>(degree) + 1, Complex(0.0));
    p.c.back() = coef;
    return p;
  }
};

Poly operator+(const Poly& u, const Poly& v) {
  Poly out;
  out.c.assign(std::max(u.c.size(), v.c.size()), Complex(0.0));
  for (std::size_t i = 0; i < u.c.size(); ++i) out.c[i] += u.c[i];
  for (std::size_t i = 0; i < v.c.size(); ++i) out.c[i] += v.c[i];
  return out;
}

Poly operator-(const Poly& u, const Poly& v) {
  Poly out;
  out.c.assign(std::max(u.c.size(), v.c.size()), Complex(0.0));
  for (std::size_t i = 0; i < u.c.size(); ++i) out.c[i] += u.c[i];
  for (std::size_t i = 0; i < v.c.size(); ++i) out.c[i] -= v.c[i];
  return out;
}

Poly operator*(const Poly& u, const Poly& v) {
  Poly out;
  if (u.c.empty() || v.c.empty()) return out;
  out.c.assign(u.c.size() + v.c.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < u.c.size(); ++i)
    for (std::size_t j = 0; j < v.c.size(); ++j) out.c[i + j] += u.c[i] * v.c[j];
  return out;
}

Poly operator*(Complex s, const Poly& u) {
  Poly out = u;
  for (auto& ci : out.c) ci *= s;
  return out;
}

Poly derivative(const Poly& u) {
  Poly out;
  if (u.c.size() <= 1) {
    out.c.assign(1, Complex(0.0));
    return out;
  }
  out.c.assign(u.c.size() - 1, Complex(0.0));
  for (std::size_t i = 1; i < u.c.size(); ++i)
    out.c[i - 1] = static_cast<double>(i) * u.c[i];
  return out;
}

// x - r as a Poly.
Poly linear(Complex r) {
  Poly p;
  p.c = {-r, Complex(1.0)};
  return p;
}

double max_coeff_mismatch(const Poly& u, const Poly& v) {
  const std::size_t n = std::max(u.c.size(), v.c.size());
  double scale = 1.0;
  for (const auto& ci : u.c) scale = std::max(scale, std::abs(ci));
  for (const auto& ci : v.c) scale = std::max(scale, std::abs(ci));
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = i < u.c.size() ? u.c[i] : Complex(0.0);
    const Complex b = i < v.c.size() ? v.c[i] : Complex(0.0);
    worst = std::max(worst, std::abs(a - b) / scale);
  }
  return worst;
}

}  // namespace

ApparentCurvePoint curve_point(Complex alpha, Complex beta, Complex gamma, Complex e) {
  const auto near = [](Complex u, Complex v) { return std::abs(u - v) <= kPunctureTol; };
  if (near(e, 0.0) || near(e, gamma - 1.0) || near(e, alpha) || near(e, beta))
    fail(errc::puncture_error, "e hits a puncture of the reduction-curve parametrization");
  const Complex s = alpha + beta - gamma + 1.0;
  if (std::abs(s) > 1e-12 && near(e, alpha * beta / s))
    fail(errc::puncture_error, "e hits the q = 0 puncture of the reduction curve");

  const Complex den = (e - alpha) * (e - beta);
  ApparentCurvePoint p;
  p.e = e;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.heun = HeunParams{e * (e - gamma + 1.0) / den,
                      alpha * beta * (e + 1.0) * (e - gamma + 1.0) / den,
                      alpha, beta, gamma, alpha + beta - gamma + 2.0};
  p.heun.validate();
  p.f32 = ThreeF2Params{alpha, beta, e + 1.0, gamma, e};
  p.f32.validate();
  return p;
}

Complex curve_residual(const HeunParams& p) {
  const Complex ab = p.alpha * p.beta;
  return p.q * p.q + ((p.gamma - 1.0) - (2.0 * ab + p.alpha + p.beta) * p.a) * p.q +
         ab * p.a * ((ab + p.alpha + p.beta + 1.0) * p.a - p.gamma);
}

Complex relabeled_curve_residual(const HeunParams& p) {
  const Complex ap = (p.a - 1.0) / p.a;
  const Complex qp = (p.alpha * p.beta * p.a - p.q) / p.a;
  return qp * qp +
         ((p.alpha + p.beta - p.gamma + 1.0) + (p.gamma - 1.0) * ap) * qp +
         p.alpha * p.beta * ap;
}

double apparent_singularity_residual(const HeunParams& p) {
  if (std::abs(p.epsilon() + 1.0) > integer_guard_tol)
    fail(errc::invalid_parameter,
         "apparent-point check requires the exponent datum epsilon = -1");
  const Complex ap = (p.a - 1.0) / p.a;
  const Complex qp = (p.alpha * p.beta * p.a - p.q) / p.a;
  // Local data at x = a: gamma' = -1, delta' = gamma, epsilon' =
  // alpha+beta-gamma+2.  The order-1 coefficient is q'/(gamma' a') and the
  // order-2 row of the recurrence carries a vanishing leading factor, so it
  // must hold as stated:
  const Complex c1 = -qp / ap;
  const Complex row =
      ((-1.0 + p.gamma) * ap + (-1.0 + p.alpha + p.beta - p.gamma + 2.0) + qp) * c1 -
      p.alpha * p.beta;
  const double scale =
      std::max({1.0, std::abs(p.alpha * p.beta), std::abs(c1)});
  return std::abs(row) / scale;
}

EvalResult eval_g(const ApparentCurvePoint& p, Complex x, const EvalPolicy& policy) {
  return eval_3f2(p.f32, x, policy);
}

EvalResult eval_g_heun(const ApparentCurvePoint& p, Complex x, const EvalPolicy& policy) {
  return eval_hl(p.heun, x, policy);
}

Complex g_via_derivative(const ApparentCurvePoint& p, Complex x,
                         const EvalPolicy& policy) {
  const GaussParams base{p.alpha, p.beta, p.gamma};
  const GaussParams raised{p.alpha + 1.0, p.beta + 1.0, p.gamma + 1.0};
  const Complex f = eval_2f1(base, x, policy).value;
  const Complex fp =
      (p.alpha * p.beta / p.gamma) * eval_2f1(raised, x, policy).value;
  return f + (x / p.e) * fp;
}

Complex g_via_contiguous(const ApparentCurvePoint& p, Complex x,
                         const EvalPolicy& policy) {
  const GaussParams base{p.alpha, p.beta, p.gamma};
  const GaussParams lowered{p.alpha, p.beta, p.gamma - 1.0};
  return ((p.e - p.gamma + 1.0) / p.e) * eval_2f1(base, x, policy).value +
         ((p.gamma - 1.0) / p.e) * eval_2f1(lowered, x, policy).value;
}

GTwoRepresentations g_two_representations(const ApparentCurvePoint& p, Complex x,
                                          const EvalPolicy& policy) {
  return GTwoRepresentations{g_via_derivative(p, x, policy),
                             g_via_contiguous(p, x, policy)};
}

double contiguity_residual(const ThreeF2Params& p, Complex x, const EvalPolicy& policy) {
  if (std::abs(p.a3) <= 1e-8)
    fail(errc::degenerate_error, "contiguous relation divides by the upper parameter a3");
  const ThreeF2Params raised{p.a1, p.a2, p.a3 + 1.0, p.b1, p.b2};
  const ThreeF2Params lowered{p.a1, p.a2, p.a3, p.b1 - 1.0, p.b2};
  const Complex f = eval_3f2(p, x, policy).value;
  const Complex fp = eval_3f2(raised, x, policy).value;
  const Complex fm = eval_3f2(lowered, x, policy).value;
  const Complex rhs =
      ((p.a3 - p.b1 + 1.0) / p.a3) * f + ((p.b1 - 1.0) / p.a3) * fm;
  return std::abs(fp - rhs) / std::max(1.0, std::abs(fp));
}

double difference_factorization_residual(const ApparentCurvePoint& p,
                                         const std::vector<int>& n_samples) {
  return difference_factorization_residual_at(p, n_samples, p.heun.a, p.heun.q);
}

double difference_factorization_residual_at(const ApparentCurvePoint& p,
                                            const std::vector<int>& n_samples,
                                            Complex a, Complex q) {
  double worst = 0.0;
  for (int n : n_samples)
    worst = std::max(worst, difference_factorization_residual_at(
                                p, Complex(static_cast<double>(n)), a, q));
  return worst;
}

double difference_factorization_residual_at(const ApparentCurvePoint& p, Complex n,
                                            Complex a, Complex q) {
  if (std::abs(n + p.e + 1.0) <= 1e-8)
    fail(errc::pole_at_sample, "sample n sits on the pole of the factored coefficient");
  const Complex alpha = p.alpha, beta = p.beta, gamma = p.gamma, e = p.e;
  const Complex delta = alpha + beta - gamma + 2.0;
  const Complex epsilon = Complex(-1.0);

  // Shift coefficients of (n+e+1)^{-1} [a E - 1] [(n+g)(n+e)(n+1) E - ...].
  const Complex f2 = a * (n + gamma + 1.0) * (n + 2.0);
  const Complex f1 = -(a * (n + alpha + 1.0) * (n + beta + 1.0) * (n + e + 2.0) +
                       (n + gamma) * (n + e) * (n + 1.0)) /
                     (n + e + 1.0);
  const Complex f0 = (n + alpha) * (n + beta);

  // Shift coefficients of the series recurrence of Hl(a, q; ...).
  const Complex r2 = a * (n + gamma + 1.0) * (n + 2.0);
  const Complex r1 =
      -((n + 1.0) * ((n + gamma + delta) * a + (n + gamma + epsilon)) + q);
  const Complex r0 = (n + alpha) * (n + beta);

  return std::max({rel_diff(f2, r2), rel_diff(f1, r1), rel_diff(f0, r0)});
}

double differential_factorization_residual(const ApparentCurvePoint& p, int k_max) {
  return differential_factorization_residual_at(p, k_max, p.heun.a, p.heun.q);
}

namespace {

double monomial_factorization_residual(const ApparentCurvePoint& p, int k, Complex a,
                                       Complex q) {
  const Complex alpha = p.alpha, beta = p.beta, gamma = p.gamma, e = p.e;
  const Complex delta = alpha + beta - gamma + 2.0;
  const Complex epsilon = Complex(-1.0);
  const double kd = static_cast<double>(k);

  // N_k: the cleared Heun operator applied to x^k.
  Poly n_k = Poly::monomial(k + 1, alpha * beta) + Poly::monomial(k, -q);
  if (k >= 1) {
    n_k = n_k + (kd * (kd - 1.0 + gamma)) *
                    (Poly::monomial(k - 1, Complex(1.0)) * linear(1.0) * linear(a));
    n_k = n_k + (delta * kd) * (Poly::monomial(k, Complex(1.0)) * linear(a));
    n_k = n_k + (epsilon * kd) * (Poly::monomial(k, Complex(1.0)) * linear(1.0));
  }

  const Poly p_poly = linear(0.0) * linear(1.0) * linear(a);
  const Poly w_poly = (e + 1.0) * (linear(1.0) * linear(a)) +
                      linear(0.0) * linear(a) + linear(0.0) * linear(1.0);

  const Poly lhs = derivative(n_k) * p_poly - n_k * derivative(p_poly) + n_k * w_poly;

  // M_k: the cleared operator of 3F2(alpha, beta, e+1; gamma, e) on x^k.
  const Complex a1 = alpha, a2 = beta, a3 = e + 1.0, b1 = gamma, b2 = e;
  Poly m_k = Poly::monomial(k, (kd + a1) * (kd + a2) * (kd + a3));
  if (k >= 1)
    m_k = m_k - Poly::monomial(k - 1, kd * (kd + b1 - 1.0) * (kd + b2 - 1.0));

  const Poly rhs = m_k * linear(1.0) * linear(a) * linear(a);

  return max_coeff_mismatch(lhs, rhs);
}

}  // namespace

double differential_factorization_residual_at(const ApparentCurvePoint& p, int k_max,
                                              Complex a, Complex q) {
  if (k_max < 0) fail(errc::invalid_parameter, "monomial degree bound must be nonnegative");
  double worst = 0.0;
  for (int k = 0; k <= k_max; ++k)
    worst = std::max(worst, monomial_factorization_residual(p, k, a, q));
  return worst;
}

}
