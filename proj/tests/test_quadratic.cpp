#include <cmath>
#include <map>

#include "heunkit/quadratic_transforms.hpp"
#include "test_helpers.hpp"

using heunkit::Complex;
using ht::C;

namespace {

// Multiplicities over each distinct image must sum to the degree.
void check_branch_sums(const heunkit::RationalMap& r) {
  std::map<std::string, int> sums;
  for (const auto& b : r.branch_table)
    sums[heunkit::point_to_string(b.image)] += b.multiplicity;
  CHECK(sums.size() >= 3);
  for (const auto& [image, total] : sums) {
    INFO("image ", image);
    CHECK(total == r.degree);
  }
}

}  // namespace

TEST_SUITE("quadratic") {

TEST_CASE("the constraint curve parametrization at t = 1") {
  auto d = heunkit::lift_from_t(C(1));
  CHECK_CNEAR(d.a, C(0.36), 1e-15);
  CHECK_CNEAR(d.a_prime, C(1.0 / 81.0), 1e-15);
  CHECK_CNEAR(d.scale, C(25.0 / 81.0), 1e-15);
  CHECK(std::abs(heunkit::quadratic_constraint_residual(d.a, d.a_prime)) < 1e-14);
  // The multiplier has the closed form (1 + a') / (2 (2 - a)).
  CHECK_CNEAR(d.scale, (C(1) + d.a_prime) / (C(2) * (C(2) - d.a)), 1e-15);
}

TEST_CASE("the constraint residual separates off-curve pairs") {
  CHECK(std::abs(heunkit::quadratic_constraint_residual(C(0.36), C(0.013))) > 1e-4);
}

TEST_CASE("t = 0, -4, -8 are punctures of the parametrization") {
  for (double t : {0.0, -4.0, -8.0})
    CHECK_THROWS_KIND(heunkit::lift_from_t(C(t)), heunkit::errc::puncture_error);
}

TEST_CASE("the degree-2 substitution map at a frozen point") {
  auto d = heunkit::lift_from_t(C(1));
  CHECK_CNEAR(heunkit::quad_map_r(d, C(0.05)), C(0.0050357374918778428), 1e-15);
}

TEST_CASE("the quadratic lifting identity holds") {
  auto d = heunkit::lift_from_t(C(1));
  double res = heunkit::quadratic_rule_residual(d, C(0.4, 0.2), C(1.1, -0.3),
                                                C(0.3, 0.1), C(0.05));
  CHECK(res <= 1e-9);
  double res2 = heunkit::quadratic_rule_residual(d, C(0.7, -0.1), C(0.8, 0.2),
                                                 C(-0.2, 0.3), C(0.03, 0.02));
  CHECK(res2 <= 1e-9);
}

TEST_CASE("the degree-4 substitution map at a frozen point") {
  CHECK_CNEAR(heunkit::biquad_map_s(C(2), C(0.1)), C(0.34544582207520012), 1e-15);
}

TEST_CASE("the biquadratic lifting identity holds") {
  double res = heunkit::biquadratic_rule_residual(C(2.1), C(0.7, 0.3),
                                                  C(0.9, 0.2), C(0.12, 0.05));
  CHECK(res <= 1e-9);
}

TEST_CASE("the argument-duplication identity holds") {
  double res = heunkit::h_duplication_residual(C(2.0), C(0.6, -0.2), C(0.1, 0.1));
  CHECK(res <= 1e-9);
  double res2 = heunkit::h_duplication_residual(C(3.0, 0.5), C(-0.4, 0.3), C(0.15));
  CHECK(res2 <= 1e-9);
}

TEST_CASE("branch tables of the substitution maps are consistent") {
  auto d = heunkit::lift_from_t(C(1));
  auto rq = heunkit::quad_map_descriptor(d);
  CHECK(rq.degree == 2);
  check_branch_sums(rq);

  auto rb = heunkit::biquad_map_descriptor(C(2.1));
  CHECK(rb.degree == 4);
  check_branch_sums(rb);

  // Every branch point of the quadratic map actually maps where the table
  // says: check by evaluating R at the finite preimages.
  for (const auto& b : rq.branch_table) {
    if (b.preimage.at_infinity || b.image.at_infinity) continue;
    CHECK_CNEAR(heunkit::quad_map_r(d, b.preimage.z), b.image.z, 1e-12);
  }
  for (const auto& b : rb.branch_table) {
    if (b.preimage.at_infinity || b.image.at_infinity) continue;
    CHECK_CNEAR(heunkit::biquad_map_s(C(2.1), b.preimage.z), b.image.z, 1e-12);
  }
}

}  // TEST_SUITE
