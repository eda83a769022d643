#include <cmath>
#include <vector>

#include "heunkit/reduction_3f2.hpp"
#include "test_helpers.hpp"

using heunkit::ApparentCurvePoint;
using heunkit::Complex;
using ht::C;

TEST_SUITE("reduction") {

TEST_CASE("the rational curve point at (1,2,3,4)") {
  auto p = heunkit::curve_point(C(1), C(2), C(3), C(4));
  CHECK_CNEAR(p.heun.a, C(4.0 / 3.0), 1e-14);
  CHECK_CNEAR(p.heun.q, C(10.0 / 3.0), 1e-14);
  CHECK_CNEAR(p.heun.delta, C(2), 1e-14);          // alpha+beta-gamma+2
  CHECK_CNEAR(p.heun.epsilon(), C(-1), 1e-14);
  CHECK_CNEAR(p.f32.a1, C(1), 0.0);
  CHECK_CNEAR(p.f32.a2, C(2), 0.0);
  CHECK_CNEAR(p.f32.a3, C(5), 1e-14);              // e + 1
  CHECK_CNEAR(p.f32.b1, C(3), 0.0);
  CHECK_CNEAR(p.f32.b2, C(4), 0.0);
  CHECK(std::abs(heunkit::curve_residual(p.heun)) < 1e-12);
  CHECK(std::abs(heunkit::relabeled_curve_residual(p.heun)) < 1e-12);
  CHECK(heunkit::apparent_singularity_residual(p.heun) < 1e-12);
}

TEST_CASE("Hl and 3F2 closed forms agree against frozen values") {
  auto p = heunkit::curve_point(C(1), C(2), C(3), C(4));
  auto g1 = heunkit::eval_g(p, C(0.2));
  auto g2 = heunkit::eval_g_heun(p, C(0.2));
  CHECK_CNEAR(g1.value, C(1.2035887828552439), 1e-12);
  CHECK_CNEAR(g2.value, C(1.2035887828552439), 1e-10);

  auto z1 = heunkit::eval_g(p, C(0.1, 0.1));
  auto z2 = heunkit::eval_g_heun(p, C(0.1, 0.1));
  CHECK_CNEAR(z1.value, C(1.0816415464996604, 0.0997021416601412), 1e-12);
  CHECK_CNEAR(z2.value, C(1.0816415464996604, 0.0997021416601412), 1e-10);
}

TEST_CASE("a complex curve point is internally consistent") {
  auto p = heunkit::curve_point(C(0.7, 0.2), C(1.3, -0.4), C(0.9, 0.1),
                                C(1.7, 0.6));
  CHECK(std::abs(heunkit::curve_residual(p.heun)) < 1e-12);
  CHECK(std::abs(heunkit::relabeled_curve_residual(p.heun)) < 1e-12);
  CHECK(heunkit::apparent_singularity_residual(p.heun) < 1e-12);
  Complex x = C(0.1, 0.05);
  auto lhs = heunkit::eval_g_heun(p, x);
  auto rhs = heunkit::eval_g(p, x);
  CHECK_CNEAR(lhs.value, rhs.value, 1e-10);
}

TEST_CASE("both 2F1 representations evaluate the collapsed function") {
  auto p = heunkit::curve_point(C(1), C(2), C(3), C(4));
  auto both = heunkit::g_two_representations(p, C(0.2));
  CHECK_CNEAR(both.r1, C(1.2035887828552439), 1e-10);
  CHECK_CNEAR(both.r2, C(1.2035887828552439), 1e-10);
  CHECK_CNEAR(heunkit::g_via_derivative(p, C(0.2)), both.r1, 1e-13);
  CHECK_CNEAR(heunkit::g_via_contiguous(p, C(0.2)), both.r2, 1e-13);
}

TEST_CASE("the contiguous relation holds for a generic 3F2") {
  heunkit::ThreeF2Params f{C(0.62, 0.21), C(-0.48, 0.37), C(1.83, 0.44),
                           C(1.37, -0.29), C(0.83, 0.44)};
  CHECK(heunkit::contiguity_residual(f, C(0.15)) <= 1e-10);
  CHECK(heunkit::contiguity_residual(f, C(0.1, 0.12)) <= 1e-10);
}

TEST_CASE("the shift-operator factorization certifies the curve") {
  auto p = heunkit::curve_point(C(0.7, 0.2), C(1.3, -0.4), C(0.9, 0.1),
                                C(1.7, 0.6));
  std::vector<int> samples{0, 1, 2, 3, 4, 5, 6};
  CHECK(heunkit::difference_factorization_residual(p, samples) <= 1e-12);
  // A perturbed (a, q) breaks the factorization by a detectable margin.
  CHECK(heunkit::difference_factorization_residual_at(
            p, samples, p.heun.a + C(1e-3), p.heun.q + C(1e-3)) >= 1e-6);
}

TEST_CASE("the differential factorization certifies the curve") {
  auto p = heunkit::curve_point(C(0.7, 0.2), C(1.3, -0.4), C(0.9, 0.1),
                                C(1.7, 0.6));
  CHECK(heunkit::differential_factorization_residual(p, 6) <= 1e-12);
  CHECK(heunkit::differential_factorization_residual_at(
            p, 6, p.heun.a + C(1e-3), p.heun.q + C(1e-3)) >= 1e-6);
}

TEST_CASE("parametrization punctures raise puncture_error") {
  // e = alpha is excluded.
  CHECK_THROWS_KIND(heunkit::curve_point(C(1), C(2), C(3), C(1)),
                    heunkit::errc::puncture_error);
  // e = gamma - 1 is excluded.
  CHECK_THROWS_KIND(heunkit::curve_point(C(0.5), C(0.7), C(1.3), C(0.3)),
                    heunkit::errc::puncture_error);
}

TEST_CASE("difference samples colliding with the factor pole are refused") {
  auto p = heunkit::curve_point(C(1), C(2), C(3), C(4));
  // n = -e - 1 = -5 makes the outer factor's normalization vanish.
  std::vector<int> samples{-5};
  CHECK_THROWS_KIND(heunkit::difference_factorization_residual(p, samples),
                    heunkit::errc::pole_at_sample);
}

}  // TEST_SUITE
