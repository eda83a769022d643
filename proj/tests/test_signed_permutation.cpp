#include <vector>

#include "heunkit/signed_permutation.hpp"
#include "test_helpers.hpp"

using heunkit::SignedPermutation;

namespace {
const std::vector<std::string> kNames = {"1", "a", "inf"};
}

TEST_SUITE("signed_permutation") {

TEST_CASE("identity element") {
  auto id = SignedPermutation::identity(3);
  CHECK(id.is_identity());
  CHECK(id.even_signed());
  CHECK(id.order() == 1);
  CHECK(heunkit::to_bracket(id, kNames) == "[1+][a+][inf+]");
}

TEST_CASE("bracket round trips") {
  for (const char* text : {"[1+][a+][inf+]", "[1+inf+][a+]", "[1-a-][inf+]",
                           "[1+a+inf+]", "[1-][a-][inf+]"}) {
    auto g = heunkit::from_bracket(text, kNames);
    CHECK(heunkit::to_bracket(g, kNames) == text);
    auto h = heunkit::from_bracket(heunkit::to_bracket(g, kNames), kNames);
    CHECK(g == h);
  }
}

TEST_CASE("composition applies the first argument last") {
  auto cyc = heunkit::from_bracket("[1+a+inf+]", kNames);  // 1->a->inf->1
  auto swp = heunkit::from_bracket("[1+a+][inf+]", kNames);
  // swp(cyc(.)): 1 ->a-> 1, a ->inf-> inf, inf ->1-> a.
  auto prod = heunkit::compose(swp, cyc);
  auto expected = heunkit::from_bracket("[1+][a+inf+]", kNames);
  CHECK(prod == expected);
  // The other order differs: cyc(swp(.)) sends 1 -> a -> inf.
  auto prod2 = heunkit::compose(cyc, swp);
  CHECK_FALSE(prod == prod2);
}

TEST_CASE("orders and inverses") {
  auto cyc = heunkit::from_bracket("[1+a+inf+]", kNames);
  CHECK(cyc.order() == 3);
  CHECK(heunkit::compose(cyc.inverse(), cyc).is_identity());
  CHECK(heunkit::compose(cyc, cyc.inverse()).is_identity());

  auto swp = heunkit::from_bracket("[1-a-][inf+]", kNames);
  CHECK(swp.order() == 2);
  CHECK(swp.even_signed());

  SignedPermutation flip{{0, 1, 2}, {-1, 1, 1}};
  CHECK(flip.order() == 2);
  CHECK_FALSE(flip.even_signed());
  CHECK_FALSE(flip.is_identity());

  // A transposition with a single sign flip has order 4.
  SignedPermutation twist{{1, 0, 2}, {-1, 1, 1}};
  CHECK(twist.order() == 4);
  CHECK_FALSE(twist.even_signed());
}

TEST_CASE("even_signed tracks the sign product") {
  SignedPermutation two{{0, 1, 2}, {-1, -1, 1}};
  CHECK(two.even_signed());
  SignedPermutation three{{0, 1, 2}, {-1, -1, -1}};
  CHECK_FALSE(three.even_signed());
}

TEST_CASE("from_bracket rejects malformed text") {
  CHECK_THROWS_KIND(heunkit::from_bracket("[1+][a+]", kNames),
                    heunkit::errc::usage_error);
  CHECK_THROWS_KIND(heunkit::from_bracket("[1+][a+][b+]", kNames),
                    heunkit::errc::usage_error);
  CHECK_THROWS_KIND(heunkit::from_bracket("[1+][a+][inf+][1+]", kNames),
                    heunkit::errc::usage_error);
}

}  // TEST_SUITE
