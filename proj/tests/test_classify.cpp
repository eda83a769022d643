#include "heunkit/classify.hpp"
#include "test_helpers.hpp"

using heunkit::Complex;
using heunkit::QuadraticPoly;
using ht::C;

TEST_SUITE("classify") {

TEST_CASE("two-term recurrences round-trip through classify_2term") {
  // The rescaled 2F1 recurrence, up to an overall factor s:
  //   P1(n) = s (n+1)(n+gamma),  P0(n) = -s A (n+alpha)(n+beta).
  Complex s = C(2, 1), A = C(1.7, -0.5);
  Complex alpha = C(0.8, 0.3), beta = C(-0.4, 0.1), gamma = C(1.3, -0.2);
  QuadraticPoly p1{s, s * (gamma + C(1)), s * gamma};
  QuadraticPoly p0{-s * A, -s * A * (alpha + beta), -s * A * alpha * beta};

  auto r = heunkit::classify_2term(p1, p0);
  CHECK_CNEAR(r.scale, A, 1e-12);
  CHECK_CNEAR(r.params.gamma, gamma, 1e-12);
  // (alpha, beta) come back in canonical lexicographic order.
  CHECK_CNEAR(r.params.alpha, beta, 1e-12);
  CHECK_CNEAR(r.params.beta, alpha, 1e-12);
}

TEST_CASE("the plain 2F1(1,1;2) arrays classify with unit scale") {
  QuadraticPoly p1{C(1), C(3), C(2)};    // (n+1)(n+2)
  QuadraticPoly p0{C(-1), C(-2), C(-1)}; // -(n+1)^2
  auto r = heunkit::classify_2term(p1, p0);
  CHECK_CNEAR(r.scale, C(1), 1e-14);
  CHECK_CNEAR(r.params.alpha, C(1), 1e-14);
  CHECK_CNEAR(r.params.beta, C(1), 1e-14);
  CHECK_CNEAR(r.params.gamma, C(2), 1e-14);
}

TEST_CASE("classify_2term rejects shift polynomials without the -1 root") {
  QuadraticPoly p1{C(1), C(0), C(1)};  // roots +-i
  QuadraticPoly p0{C(-1), C(-2), C(-1)};
  CHECK_THROWS_KIND(heunkit::classify_2term(p1, p0), heunkit::errc::shape_error);
}

TEST_CASE("three-term recurrences round-trip through classify_3term") {
  Complex s = C(1.5, -0.8), A = C(1.2, -0.4);
  Complex a = C(2.1, -0.7), q = C(0.9, 0.4);
  Complex alpha = C(0.6, 0.2), beta = C(-0.3, 0.5);
  Complex gamma = C(1.1, -0.3), delta = C(0.7, 0.6);
  Complex eps = alpha + beta - gamma - delta + C(1);

  QuadraticPoly p2{s * a, s * a * (gamma + C(3)), C(2) * s * a * (gamma + C(1))};
  QuadraticPoly p1{-s * A * (a + C(1)),
                   -s * A * (a * (gamma + delta + C(1)) + gamma + eps + C(1)),
                   -s * A * (a * (gamma + delta) + gamma + eps + q)};
  QuadraticPoly p0{s * A * A, s * A * A * (alpha + beta), s * A * A * alpha * beta};

  auto r = heunkit::classify_3term(p2, p1, p0);
  CHECK_CNEAR(r.scale, A, 1e-10);
  CHECK_CNEAR(r.params.a, a, 1e-10);
  CHECK_CNEAR(r.params.q, q, 1e-10);
  CHECK_CNEAR(r.params.gamma, gamma, 1e-10);
  CHECK_CNEAR(r.params.delta, delta, 1e-10);
  // beta < alpha lexicographically here.
  CHECK_CNEAR(r.params.alpha, beta, 1e-10);
  CHECK_CNEAR(r.params.beta, alpha, 1e-10);
}

TEST_CASE("the plain Heun arrays for (a=2,q=1,all ones) classify exactly") {
  // (n+2)(n+2)*2, -(3n^2+9n+7), (n+1)^2  -- from the coefficient recurrence.
  QuadraticPoly p2{C(2), C(8), C(8)};
  QuadraticPoly p1{C(-3), C(-9), C(-7)};
  QuadraticPoly p0{C(1), C(2), C(1)};
  auto r = heunkit::classify_3term(p2, p1, p0);
  CHECK_CNEAR(r.scale, C(1), 1e-12);
  CHECK_CNEAR(r.params.a, C(2), 1e-12);
  CHECK_CNEAR(r.params.q, C(1), 1e-12);
  CHECK_CNEAR(r.params.alpha, C(1), 1e-12);
  CHECK_CNEAR(r.params.beta, C(1), 1e-12);
  CHECK_CNEAR(r.params.gamma, C(1), 1e-12);
  CHECK_CNEAR(r.params.delta, C(1), 1e-12);
}

TEST_CASE("a double characteristic root (confluent a = 1) is rejected") {
  // Characteristic polynomial n^2 - 2n + 1 has the double root 1.
  QuadraticPoly p2{C(1), C(4.1), C(4.2)};
  QuadraticPoly p1{C(-2), C(-5), C(-4)};
  QuadraticPoly p0{C(1), C(1.5), C(0.56)};
  CHECK_THROWS_KIND(heunkit::classify_3term(p2, p1, p0),
                    heunkit::errc::degenerate_error);
}

TEST_CASE("classify_3term rejects shift polynomials without the -2 root") {
  QuadraticPoly p2{C(1), C(0), C(1)};
  QuadraticPoly p1{C(-3), C(-9), C(-7)};
  QuadraticPoly p0{C(1), C(2), C(1)};
  CHECK_THROWS_KIND(heunkit::classify_3term(p2, p1, p0), heunkit::errc::shape_error);
}

TEST_CASE("quadratic root extraction is stable") {
  QuadraticPoly p{C(1), C(-3), C(2)};
  auto [r1, r2] = p.roots();
  // Roots {1, 2} in some order.
  double d11 = ht::dist(r1, C(1)), d22 = ht::dist(r2, C(2));
  double d12 = ht::dist(r1, C(2)), d21 = ht::dist(r2, C(1));
  CHECK(std::min(d11 + d22, d12 + d21) < 1e-14);
  CHECK_THROWS_KIND((QuadraticPoly{C(0), C(1), C(1)}.roots()),
                    heunkit::errc::shape_error);
}

}  // TEST_SUITE
