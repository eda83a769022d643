#pragma once

#include <string>
#include <vector>

#include "heunkit/error.hpp"

namespace heunkit {

// Element of the group of signed permutations of a labeled point set.
// perm[i] is the image of point i; sign[i] is attached to point i after the
// permutation has acted (it records whether the exponent difference arriving
// at point i is negated).
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t n);
  std::size_t size() const noexcept { return perm.size(); }
  bool is_identity() const;
  // Product of the signs is +1 (membership in the even-signed subgroup).
  bool even_signed() const;
  SignedPermutation inverse() const;
  // Smallest k >= 1 with g^k = identity.
  int order() const;
};

bool operator==(const SignedPermutation& u, const SignedPermutation& v);

// Apply g1 first, then g2.
SignedPermutation compose(const SignedPermutation& g2, const SignedPermutation& g1);

// Bracket notation over point names, e.g. "[1+inf+][a+]".  Cycles list the
// orbit of the permutation; the sign printed on point p is the sign at its
// image.  Fixed points appear as singleton brackets.
std::string to_bracket(const SignedPermutation& g, const std::vector<std::string>& names);
SignedPermutation from_bracket(const std::string& text, const std::vector<std::string>& names);

}
