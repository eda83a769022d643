#include "heunkit/classify.hpp"

#include <algorithm>
#include <cmath>

namespace heunkit {

namespace {

constexpr double kShapeTol = 1e-8;

double poly_scale(const QuadraticPoly& p) {
  return std::max({std::abs(p.c2), std::abs(p.c1), std::abs(p.c0), 1.0});
}

// Relative agreement of two quadratics up to the common factor lambda.
void require_match(const QuadraticPoly& got, const QuadraticPoly& want, const char* what) {
  const double scale = std::max(poly_scale(got), poly_scale(want));
  if (std::abs(got.c2 - want.c2) > kShapeTol * scale ||
      std::abs(got.c1 - want.c1) > kShapeTol * scale ||
      std::abs(got.c0 - want.c0) > kShapeTol * scale)
    fail(errc::shape_error, what);
}

std::pair<Complex, Complex> sorted_pair(Complex u, Complex v) {
  if (complex_less(v, u)) std::swap(u, v);
  return {u, v};
}

}  // namespace

std::pair<Complex, Complex> QuadraticPoly::roots() const {
  if (std::abs(c2) <= kShapeTol * poly_scale(*this))
    fail(errc::shape_error, "root extraction requires an exact degree-2 polynomial");
  const Complex disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
  // Pick the sign that avoids cancellation in -c1 -/+ disc.
  const Complex s = (std::abs(c1 - disc) > std::abs(c1 + disc)) ? (c1 - disc) : (c1 + disc);
  if (std::abs(s) == 0.0) return {0.0, 0.0};
  const Complex r1 = -s / (2.0 * c2);
  const Complex r2 = c0 / (c2 * r1);
  return {r1, r2};
}

Classified2Term classify_2term(const QuadraticPoly& p1, const QuadraticPoly& p0) {
  auto [u1, u2] = p1.roots();
  // Orient so u1 is the mandatory root at -1.
  if (std::abs(u2 + 1.0) < std::abs(u1 + 1.0)) std::swap(u1, u2);
  if (std::abs(u1 + 1.0) > kShapeTol)
    fail(errc::shape_error, "shift coefficient must vanish at n = -1");
  if (is_near_integer(u2) && u2.real() > -1.0 + kShapeTol)
    fail(errc::shape_error, "second shift-coefficient root is an integer exceeding -1");

  const Complex gamma = -u2;
  auto [v1, v2] = p0.roots();
  auto [alpha, beta] = sorted_pair(-v1, -v2);
  const Complex scale = -p0.c2 / p1.c2;

  GaussParams params{alpha, beta, gamma};
  params.validate();

  // The ratio -P0/P1 must be exactly A (n+alpha)(n+beta) / ((n+gamma)(n+1)).
  require_match(p0, QuadraticPoly{-scale * p1.c2, -scale * p1.c2 * (alpha + beta),
                                  -scale * p1.c2 * alpha * beta},
                "recurrence is not of hypergeometric ratio form");
  return {scale, params};
}

Classified3Term classify_3term(const QuadraticPoly& p2, const QuadraticPoly& p1,
                               const QuadraticPoly& p0) {
  auto [u1, u2] = p2.roots();
  if (std::abs(u2 + 2.0) < std::abs(u1 + 2.0)) std::swap(u1, u2);
  if (std::abs(u1 + 2.0) > kShapeTol)
    fail(errc::shape_error, "double-shift coefficient must vanish at n = -2");
  if (is_near_integer(u2) && u2.real() > -2.0 + kShapeTol)
    fail(errc::shape_error, "second double-shift root is an integer exceeding -2");
  const Complex gamma = -u2 - 1.0;

  auto [v1, v2] = p0.roots();
  auto [alpha, beta] = sorted_pair(-v1, -v2);

  // Characteristic polynomial from the n^2 coefficients; its roots are the
  // o.g.f. singularity growth rates {A, A/a}.
  const QuadraticPoly char_poly{p2.c2, p1.c2, p0.c2};
  auto [z1, z2] = char_poly.roots();
  if (std::abs(z1 - z2) <= kShapeTol * std::max(std::abs(z1), std::abs(z2)))
    fail(errc::degenerate_error,
         "characteristic roots coincide (confluent a = 1 configuration)");

  // Two consistent assignments, related by a <-> 1/a; prefer |a| >= 1.
  Complex scale = z1, a = z1 / z2;
  const Complex a_alt = z2 / z1;
  if (std::abs(a) < 1.0 - kShapeTol ||
      (std::abs(std::abs(a) - std::abs(a_alt)) <= kShapeTol && complex_less(a_alt, a))) {
    scale = z2;
    a = a_alt;
  }

  const Complex lambda = p0.c2;
  if (std::abs(lambda) == 0.0)
    fail(errc::shape_error, "subdiagonal coefficient must have degree 2");
  const Complex q = -scale * p1.eval(-1.0) / lambda;
  // Solve the n^1 coefficient of the shift term for delta (epsilon is then
  // fixed by the exponent-sum constraint).
  const Complex delta =
      (-scale * p1.c1 / lambda - a * (1.0 + gamma) - (2.0 + alpha + beta)) / (a - 1.0);

  HeunParams params{a, q, alpha, beta, gamma, delta};
  params.validate();
  const Complex eps = params.epsilon();

  // Rebuild the three polynomials and demand agreement up to lambda.
  const Complex s2 = lambda * a / (scale * scale);
  require_match(p2, QuadraticPoly{s2, s2 * (gamma + 3.0), s2 * 2.0 * (gamma + 1.0)},
                "double-shift coefficient is not of Heun form");
  const Complex s1 = -lambda / scale;
  require_match(
      p1,
      QuadraticPoly{s1 * (a + 1.0),
                    s1 * (a * (1.0 + gamma + delta) + (1.0 + gamma + eps)),
                    s1 * (a * (gamma + delta) + (gamma + eps) + q)},
      "shift coefficient is not of Heun form");
  require_match(p0, QuadraticPoly{lambda, lambda * (alpha + beta), lambda * alpha * beta},
                "subdiagonal coefficient is not of Heun form");

  return {scale, params};
}

}
