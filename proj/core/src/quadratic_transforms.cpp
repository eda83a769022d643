#include "heunkit/quadratic_transforms.hpp"

#include <algorithm>
#include <cmath>

#include "heunkit/error.hpp"

namespace heunkit {

namespace {

constexpr double kPunctureTol = 1e-6;

double rel_diff(Complex u, Complex v) {
  const double scale = std::max({std::abs(u), std::abs(v), 1e-30});
  return std::abs(u - v) / scale;
}

}  // namespace

Complex quadratic_constraint_residual(Complex a, Complex a_prime) {
  const Complex l = a * a * (1.0 - a_prime) * (1.0 - a_prime);
  return l - 16.0 * (1.0 - a) * a_prime;
}

QuadraticLiftData lift_from_t(Complex t) {
  if (std::abs(t) <= kPunctureTol || std::abs(t + 4.0) <= kPunctureTol ||
      std::abs(t + 8.0) <= kPunctureTol)
    fail(errc::puncture_error, "t hits a puncture of the constraint-curve parametrization");
  const Complex t4 = t + 4.0;
  const Complex t8 = t + 8.0;
  QuadraticLiftData d;
  d.a = t * t8 / (t4 * t4);
  d.a_prime = t * t / (t8 * t8);
  d.scale = (t4 / t8) * (t4 / t8);
  return d;
}

Complex quad_map_r(const QuadraticLiftData& d, Complex x) {
  if (std::abs(1.0 - x) <= 1e-12 * std::max(1.0, std::abs(x)))
    fail(errc::domain_error, "substitution evaluated at its pole x = 1");
  return d.scale * x * (d.a - x) / (1.0 - x);
}

double quadratic_rule_residual(const QuadraticLiftData& d, Complex alpha, Complex gamma,
                               Complex q, Complex x, const EvalPolicy& policy) {
  const HeunParams source{d.a, q, 2.0 * alpha, gamma, gamma, 2.0 * alpha - gamma + 1.0};
  const HeunParams target{d.a_prime, d.scale * (q - gamma * alpha * d.a),
                          alpha, gamma - alpha, gamma, Complex(0.5)};
  const Complex lhs = eval_hl(source, x, policy).value;
  const Complex rhs = principal_power(1.0 - x, -alpha) *
                      eval_hl(target, quad_map_r(d, x), policy).value;
  return rel_diff(lhs, rhs);
}

Complex biquad_map_s(Complex a, Complex x) {
  const Complex den = a - x * x;
  if (std::abs(den) <= 1e-12 * std::max(1.0, std::abs(a)))
    fail(errc::domain_error, "substitution evaluated at its pole x^2 = a");
  return 4.0 * a * x * (1.0 - x) * (a - x) / (den * den);
}

double biquadratic_rule_residual(Complex a, Complex q, Complex gamma, Complex x,
                                 const EvalPolicy& policy) {
  const HeunParams source{a, q, 2.0 * gamma - 1.0, gamma, gamma, gamma};
  const HeunParams target{a, q / 4.0, gamma / 2.0 - 0.25, gamma / 2.0 + 0.25,
                          gamma, Complex(0.5)};
  const Complex lhs = eval_hl(source, x, policy).value;
  const Complex rhs = principal_power(1.0 - x * x / a, -gamma + 0.5) *
                      eval_hl(target, biquad_map_s(a, x), policy).value;
  return rel_diff(lhs, rhs);
}

double h_duplication_residual(Complex a, Complex q, Complex x, const EvalPolicy& policy) {
  const HeunParams h{a, q, Complex(0.0), Complex(0.5), Complex(0.5), Complex(0.5)};
  const HeunParams h_quarter{a, q / 4.0, Complex(0.0), Complex(0.5), Complex(0.5),
                             Complex(0.5)};
  const Complex lhs = eval_hl(h, x, policy).value;
  const Complex rhs = eval_hl(h_quarter, biquad_map_s(a, x), policy).value;
  return rel_diff(lhs, rhs);
}

RationalMap quad_map_descriptor(const QuadraticLiftData& d) {
  // Fibers over 1 and a' are double points; their locations solve
  // A x^2 - (A a + v) x + v = 0 with vanishing discriminant.
  const Complex c1 = (d.scale * d.a + 1.0) / (2.0 * d.scale);
  const Complex c2 = (d.scale * d.a + d.a_prime) / (2.0 * d.scale);
  for (Complex v : {Complex(1.0), d.a_prime}) {
    const Complex disc = (d.scale * d.a + v) * (d.scale * d.a + v) - 4.0 * d.scale * v;
    if (std::abs(disc) > 1e-8 * std::max(1.0, std::abs(d.scale * d.a + v)))
      fail(errc::inconsistent_branching,
           "lift data is off the constraint curve: fiber is not a double point");
  }
  RationalMap r;
  r.degree = 2;
  r.name = "quadratic";
  r.branch_table = {
      {SpherePoint::finite(0.0), SpherePoint::finite(0.0), 1},
      {SpherePoint::finite(d.a), SpherePoint::finite(0.0), 1},
      {SpherePoint::finite(1.0), SpherePoint::infinity(), 1},
      {SpherePoint::infinity(), SpherePoint::infinity(), 1},
      {SpherePoint::finite(c1), SpherePoint::finite(1.0), 2},
      {SpherePoint::finite(c2), SpherePoint::finite(d.a_prime), 2},
  };
  return r;
}

RationalMap biquad_map_descriptor(Complex a) {
  const Complex s1 = std::sqrt(a * a - a);
  const Complex s2 = std::sqrt(1.0 - a);
  const Complex s3 = std::sqrt(a);
  RationalMap r;
  r.degree = 4;
  r.name = "biquadratic";
  r.branch_table = {
      {SpherePoint::finite(0.0), SpherePoint::finite(0.0), 1},
      {SpherePoint::finite(1.0), SpherePoint::finite(0.0), 1},
      {SpherePoint::finite(a), SpherePoint::finite(0.0), 1},
      {SpherePoint::infinity(), SpherePoint::finite(0.0), 1},
      {SpherePoint::finite(a + s1), SpherePoint::finite(1.0), 2},
      {SpherePoint::finite(a - s1), SpherePoint::finite(1.0), 2},
      {SpherePoint::finite(1.0 + s2), SpherePoint::finite(a), 2},
      {SpherePoint::finite(1.0 - s2), SpherePoint::finite(a), 2},
      {SpherePoint::finite(s3), SpherePoint::infinity(), 2},
      {SpherePoint::finite(-s3), SpherePoint::infinity(), 2},
  };
  return r;
}

}
