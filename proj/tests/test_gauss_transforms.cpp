#include <algorithm>
#include <cmath>

#include "heunkit/gauss_transforms.hpp"
#include "test_helpers.hpp"

using heunkit::Complex;
using heunkit::GaussParams;
using heunkit::GaussRule;
using ht::C;

namespace {

const GaussParams kP{C(0.35, 0.15), C(-0.42, 0.27), C(1.21, -0.33)};

double rule_residual(const GaussRule& r, const GaussParams& p, Complex x) {
  auto lhs = heunkit::eval_2f1(p, x);
  auto rhs = heunkit::apply_gauss_rule(r, p, x);
  return std::abs(lhs.value - rhs.value) / std::max(1.0, std::abs(lhs.value));
}

}  // namespace

TEST_SUITE("gauss") {

TEST_CASE("the catalog has eight rules; four fix the numerator order") {
  auto all = heunkit::kummer_rules(true);
  auto even = heunkit::kummer_rules(false);
  CHECK(all.size() == 8);
  CHECK(even.size() == 4);
  for (const auto& r : even) CHECK(r.label.even_signed());
  // Exactly one identity rule.
  int ids = 0;
  for (const auto& r : all) ids += r.label.is_identity() ? 1 : 0;
  CHECK(ids == 1);
}

TEST_CASE("every rule reproduces 2F1 at a frozen complex point") {
  for (const auto& r : heunkit::kummer_rules(true)) {
    INFO("rule ", r.bracket(), " (", r.name, ")");
    CHECK(rule_residual(r, kP, C(0.15, 0.1)) <= 1e-10);
    CHECK(rule_residual(r, kP, C(-0.2, 0.07)) <= 1e-10);
  }
}

TEST_CASE("the even-signed quadruple is a Klein four-group") {
  auto even = heunkit::kummer_rules(false);
  REQUIRE(even.size() == 4);
  for (const auto& r : even) {
    auto sq = heunkit::compose_gauss_rules(r, r);
    CHECK(sq.label.is_identity());
  }
  for (const auto& u : even)
    for (const auto& v : even) {
      auto uv = heunkit::compose_gauss_rules(u, v);
      auto vu = heunkit::compose_gauss_rules(v, u);
      CHECK(uv.label == vu.label);
    }
}

TEST_CASE("closures have the expected sizes") {
  CHECK(heunkit::gauss_closure(heunkit::kummer_rules(false)).size() == 4);
  CHECK(heunkit::gauss_closure(heunkit::kummer_rules(true)).size() == 8);
}

TEST_CASE("the catalog contains Pfaff- and Euler-type rules") {
  auto all = heunkit::kummer_rules(true);
  // Pfaff: argument moves to x/(x-1).
  Complex x = C(0.3);
  bool has_pfaff = std::any_of(all.begin(), all.end(), [&](const GaussRule& r) {
    return std::abs(r.arg_map(x) - x / (x - C(1))) < 1e-13;
  });
  CHECK(has_pfaff);
  // Euler: argument fixed, prefactor (1-x)^(gamma-alpha-beta).
  Complex want = std::pow(C(0.7), kP.gamma - kP.alpha - kP.beta);
  bool has_euler = std::any_of(all.begin(), all.end(), [&](const GaussRule& r) {
    return std::abs(r.arg_map(x) - x) < 1e-13 &&
           std::abs(r.prefactor(kP, x) - want) < 1e-12;
  });
  CHECK(has_euler);
}

TEST_CASE("find_gauss_rule retrieves by label") {
  auto all = heunkit::kummer_rules(true);
  auto even = heunkit::kummer_rules(false);
  for (const auto& r : all) {
    const GaussRule* hit = heunkit::find_gauss_rule(all, r.label);
    REQUIRE(hit != nullptr);
    CHECK(hit->bracket() == r.bracket());
  }
  // An odd-signed label is absent from the even quadruple.
  const GaussRule* miss = nullptr;
  for (const auto& r : all)
    if (!r.label.even_signed()) {
      miss = heunkit::find_gauss_rule(even, r.label);
      break;
    }
  CHECK(miss == nullptr);
}

TEST_CASE("composition concatenates generator words") {
  auto all = heunkit::kummer_rules(true);
  const GaussRule* euler = nullptr;
  for (const auto& r : all)
    if (!r.label.is_identity() && r.label.even_signed()) euler = &r;
  REQUIRE(euler != nullptr);
  auto c = heunkit::compose_gauss_rules(*euler, *euler);
  CHECK(c.word.size() == 2 * euler->word.size());
  CHECK(rule_residual(c, kP, C(0.12, 0.06)) <= 1e-10);
}

}  // TEST_SUITE
