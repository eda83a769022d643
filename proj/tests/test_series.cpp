#include <cmath>
#include <complex>

#include "heunkit/series.hpp"
#include "test_helpers.hpp"

using heunkit::Complex;
using heunkit::EvalPolicy;
using heunkit::GaussParams;
using heunkit::HeunParams;
using heunkit::ThreeF2Params;
using ht::C;

TEST_SUITE("series") {

TEST_CASE("gauss coefficients of 2F1(1,1;2) are 1/(n+1)") {
  GaussParams p{C(1), C(1), C(2)};
  auto c = heunkit::gauss_coeffs(p, 3);
  REQUIRE(c.size() == 4);
  CHECK_CNEAR(c[0], C(1), 0.0);
  CHECK_CNEAR(c[1], C(0.5), 1e-15);
  CHECK_CNEAR(c[2], C(1.0 / 3.0), 1e-15);
  CHECK_CNEAR(c[3], C(0.25), 1e-15);
}

TEST_CASE("2F1(1,1;2;x) equals -log(1-x)/x") {
  GaussParams p{C(1), C(1), C(2)};
  auto half = heunkit::eval_2f1(p, C(0.5));
  // 2 log 2
  CHECK_CNEAR(half.value, C(1.3862943611198906), 1e-13);
  CHECK(half.err_estimate < 1e-11);
  CHECK(half.terms_used > 10);

  auto zc = heunkit::eval_2f1(p, C(0.23, 0.11));
  CHECK_CNEAR(zc.value, C(1.1292193910131850, 0.0768822677944068), 1e-13);
}

TEST_CASE("2F1(a,b;b;x) collapses to the binomial (1-x)^(-a)") {
  Complex a = C(0.37, -0.21);
  Complex b = C(1.3, 0.4);
  Complex x = C(0.2, 0.15);
  auto r = heunkit::eval_2f1(GaussParams{a, b, b}, x);
  CHECK_CNEAR(r.value, std::pow(C(1) - x, -a), 1e-12);
}

TEST_CASE("2F1 at a frozen complex parameter point") {
  GaussParams p{C(0.35, 0.15), C(-0.42, 0.27), C(1.21, -0.33)};
  auto r = heunkit::eval_2f1(p, C(0.25, 0.1));
  CHECK_CNEAR(r.value, C(0.9639478840549127, -0.0211743091174172), 1e-13);
}

TEST_CASE("heun coefficients for (a=2, q=1, alpha=beta=gamma=delta=1)") {
  HeunParams p{C(2), C(1), C(1), C(1), C(1), C(1)};
  auto c = heunkit::heun_coeffs(p, 2);
  REQUIRE(c.size() == 3);
  CHECK_CNEAR(c[0], C(1), 0.0);
  CHECK_CNEAR(c[1], C(0.5), 1e-15);  // q / (gamma a)
  CHECK_CNEAR(c[2], C(0.3125), 1e-15);
}

TEST_CASE("Hl collapses to 2F1 when epsilon = 0 and q = alpha beta a") {
  Complex alpha = C(0.7), beta = C(1.2), gamma = C(0.9);
  Complex delta = alpha + beta - gamma + C(1);  // forces epsilon = 0
  Complex a = C(1.7, 0.4);
  HeunParams hp{a, alpha * beta * a, alpha, beta, gamma, delta};
  CHECK(std::abs(hp.epsilon()) < 1e-15);
  Complex x = C(0.15, -0.1);
  auto lhs = heunkit::eval_hl(hp, x);
  auto rhs = heunkit::eval_2f1(GaussParams{alpha, beta, gamma}, x);
  CHECK_CNEAR(lhs.value, rhs.value, 1e-12);
}

TEST_CASE("3F2 frozen values") {
  ThreeF2Params pr{C(0.5), C(0.7), C(1.1), C(1.3), C(0.9)};
  auto r = heunkit::eval_3f2(pr, C(0.25));
  CHECK_CNEAR(r.value, C(1.0977365405133923), 1e-13);

  ThreeF2Params pc{C(0.62, 0.21), C(-0.48, 0.37), C(1.83, 0.44),
                   C(1.37, -0.29), C(0.83, 0.44)};
  auto rc = heunkit::eval_3f2(pc, C(0.2, 0.1));
  CHECK_CNEAR(rc.value, C(0.8723012371942427, -0.0216466774730374), 1e-13);
}

TEST_CASE("evaluation is refused near the convergence radius") {
  GaussParams p{C(1), C(1), C(2)};
  CHECK_THROWS_KIND(heunkit::eval_2f1(p, C(0.96)), heunkit::errc::domain_error);

  // Hl radius is min(1, |a|): with a = 0.5 the guarded radius is 0.475.
  HeunParams hp{C(0.5), C(0.3), C(0.7), C(0.9), C(1.1), C(0.8)};
  CHECK_THROWS_KIND(heunkit::eval_hl(hp, C(0.48)), heunkit::errc::domain_error);
  CHECK_NOTHROW((void)heunkit::eval_hl(hp, C(0.3)));
}

TEST_CASE("parameter validation rejects degenerate lower parameters") {
  CHECK_THROWS_KIND((GaussParams{C(1), C(1), C(0)}.validate()),
                    heunkit::errc::invalid_parameter);
  CHECK_THROWS_KIND((GaussParams{C(1), C(1), C(-3)}.validate()),
                    heunkit::errc::invalid_parameter);
  CHECK_NOTHROW((GaussParams{C(1), C(1), C(0.5)}.validate()));

  CHECK_THROWS_KIND((HeunParams{C(0), C(1), C(1), C(1), C(1), C(1)}.validate()),
                    heunkit::errc::invalid_parameter);
  CHECK_THROWS_KIND((HeunParams{C(1), C(1), C(1), C(1), C(1), C(1)}.validate()),
                    heunkit::errc::invalid_parameter);
  CHECK_THROWS_KIND((HeunParams{C(2), C(1), C(1), C(1), C(-2), C(1)}.validate()),
                    heunkit::errc::invalid_parameter);

  CHECK_THROWS_KIND((ThreeF2Params{C(1), C(1), C(1), C(-2), C(1)}.validate()),
                    heunkit::errc::invalid_parameter);
  CHECK_THROWS_KIND((ThreeF2Params{C(1), C(1), C(1), C(1), C(0)}.validate()),
                    heunkit::errc::invalid_parameter);
}

TEST_CASE("series_derivative shifts and scales coefficients") {
  auto c = heunkit::gauss_coeffs(GaussParams{C(1), C(1), C(2)}, 8);
  auto d1 = heunkit::series_derivative(c, 1);
  REQUIRE(d1.size() == 8);
  CHECK_CNEAR(d1[0], C(0.5), 1e-15);              // c1 * 1
  CHECK_CNEAR(d1[1], C(2.0 / 3.0), 1e-15);        // c2 * 2
  CHECK_CNEAR(d1[2], C(0.75), 1e-15);             // c3 * 3
  auto d2 = heunkit::series_derivative(c, 2);
  REQUIRE(d2.size() == 7);
  CHECK_CNEAR(d2[0], C(2.0 / 3.0), 1e-15);        // c2 * 2!
  CHECK_CNEAR(d2[1], C(1.5), 1e-15);              // c3 * 3!/1!
}

TEST_CASE("principal_power matches exp(mu log base) on the principal branch") {
  Complex b = C(0.8, 0.1);
  Complex mu = C(0.3, -0.2);
  CHECK_CNEAR(heunkit::principal_power(b, mu), std::exp(mu * std::log(b)), 1e-14);
  CHECK_CNEAR(heunkit::principal_power(C(1), C(7.3, -2.0)), C(1), 1e-15);
}

}  // TEST_SUITE
