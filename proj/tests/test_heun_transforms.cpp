#include <algorithm>
#include <cmath>

#include "heunkit/heun_transforms.hpp"
#include "test_helpers.hpp"

using heunkit::Complex;
using heunkit::HeunParams;
using heunkit::HlRule;
using ht::C;

namespace {

const HeunParams kP{C(2.2, 0.7), C(0.41, -0.23), C(0.31, 0.21),
                    C(-0.56, 0.13), C(1.23, -0.41), C(0.67, 0.29)};

double rule_residual(const HlRule& r, const HeunParams& p, Complex x) {
  auto lhs = heunkit::eval_hl(p, x);
  auto rhs = heunkit::apply_hl_rule(r, p, x);
  return std::abs(lhs.value - rhs.value) / std::max(1.0, std::abs(lhs.value));
}

}  // namespace

TEST_SUITE("heun") {

TEST_CASE("generator inventory") {
  CHECK(heunkit::mobius_hl_rules().size() == 6);
  CHECK(heunkit::hl_generators().size() == 7);
}

TEST_CASE("the substitution group closes at 24 even-signed rules") {
  auto group = heunkit::generate_hl_group();
  REQUIRE(group.size() == 24);
  for (const auto& r : group) CHECK(r.label.even_signed());
  CHECK(std::is_sorted(group.begin(), group.end(),
                       [](const HlRule& u, const HlRule& v) {
                         return u.bracket() < v.bracket();
                       }));
  const HlRule* id = heunkit::find_hl_rule(
      group, heunkit::SignedPermutation::identity(3));
  REQUIRE(id != nullptr);
  CHECK(id->label.is_identity());
}

TEST_CASE("every group element reproduces Hl at a frozen point") {
  auto group = heunkit::generate_hl_group();
  Complex x = C(0.12, 0.08);
  for (const auto& r : group) {
    INFO("rule ", r.bracket(), " (", r.name, ")");
    CHECK(rule_residual(r, kP, x) <= 1e-9);
  }
}

TEST_CASE("the Moebius rules respect the normalized accessory parameter") {
  Complex qb = heunkit::qbar_of(kP);
  for (const auto& r : heunkit::mobius_hl_rules()) {
    REQUIRE(static_cast<bool>(r.qbar_shadow));
    HeunParams image = r.param_map(kP);
    Complex lhs = heunkit::qbar_of(image);
    Complex rhs = r.qbar_shadow(kP, qb);
    INFO("rule ", r.bracket(), " (", r.name, ")");
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("qbar_of inverts through q_from_qbar") {
  Complex qb = heunkit::qbar_of(kP);
  CHECK_CNEAR(heunkit::q_from_qbar(qb, kP), kP.q, 1e-10);
  HeunParams bad = kP;
  bad.alpha = C(0);
  CHECK_THROWS_KIND(heunkit::qbar_of(bad), heunkit::errc::degenerate_error);
}

TEST_CASE("the index-shift generator at x = 1 flips delta") {
  auto tw = heunkit::fhomotopy_hl_rule_at_1();
  HeunParams image = tw.param_map(kP);
  CHECK_CNEAR(image.delta, C(2) - kP.delta, 1e-14);
  CHECK_CNEAR(tw.prefactor(kP, C(0.1)),
              heunkit::principal_power(C(0.9), C(1) - kP.delta), 1e-13);
  CHECK(rule_residual(tw, kP, C(0.1, 0.05)) <= 1e-9);
}

TEST_CASE("derivative_target implements the accessory shift") {
  HeunParams p{C(2), C(0.5), C(0), C(1), C(1), C(2)};
  auto t = heunkit::derivative_target(p, 1);
  CHECK_CNEAR(t.a, C(2), 0.0);
  CHECK_CNEAR(t.q, C(6.5), 1e-13);  // q + (a+1) gamma + a delta + epsilon
  CHECK_CNEAR(t.alpha, C(2), 1e-14);
  CHECK_CNEAR(t.beta, C(2), 1e-14);
  CHECK_CNEAR(t.gamma, C(2), 1e-14);
  CHECK_CNEAR(t.delta, C(3), 1e-14);
}

TEST_CASE("the derivative identity holds coefficient-wise") {
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    HeunParams p{C(2.2, 0.7), C(0.41, -0.23), C(1.0 - double(n)),
                 C(1.3, 0.2), C(0.9, -0.3), C(1.1, 0.4)};
    INFO("order ", n);
    CHECK(heunkit::derivative_identity_residual(p, n) <= 1e-9);
  }
}

TEST_CASE("the local solution at x = a is normalized there") {
  auto r = heunkit::eval_local_at_a(kP, kP.a);
  CHECK_CNEAR(r.value, C(1), 1e-15);
  auto near = heunkit::eval_local_at_a(kP, kP.a * C(0.98));
  CHECK(std::isfinite(std::abs(near.value)));
  auto local = heunkit::local_solution_at_a(kP);
  CHECK_NOTHROW(local.params.validate());
}

TEST_CASE("probe equality distinguishes distinct rules") {
  auto group = heunkit::generate_hl_group();
  CHECK(heunkit::hl_rules_probe_equal(group[3], group[3]));
  CHECK_FALSE(heunkit::hl_rules_probe_equal(group[3], group[4]));
}

}  // TEST_SUITE
