#include "heunkit/signed_permutation.hpp"

#include <algorithm>

namespace heunkit {

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation g;
  g.perm.resize(n);
  g.sign.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) g.perm[i] = static_cast<int>(i);
  return g;
}

bool SignedPermutation::is_identity() const { return *this == identity(size()); }

bool SignedPermutation::even_signed() const {
  int prod = 1;
  for (int s : sign) prod *= s;
  return prod == 1;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation g;
  g.perm.resize(size());
  g.sign.resize(size());
  for (std::size_t i = 0; i < size(); ++i) g.perm[perm[i]] = static_cast<int>(i);
  // Undoing the move also undoes the negation picked up at the image.
  for (std::size_t i = 0; i < size(); ++i) g.sign[i] = sign[perm[i]];
  return g;
}

int SignedPermutation::order() const {
  SignedPermutation acc = identity(size());
  for (int k = 1; k <= 1 << 10; ++k) {
    acc = compose(*this, acc);
    if (acc.is_identity()) return k;
  }
  fail(errc::closure_error, "element order exceeded the search bound");
}

bool operator==(const SignedPermutation& u, const SignedPermutation& v) {
  return u.perm == v.perm && u.sign == v.sign;
}

SignedPermutation compose(const SignedPermutation& g2, const SignedPermutation& g1) {
  if (g1.size() != g2.size())
    fail(errc::invalid_parameter, "signed permutations act on different point sets");
  const std::size_t n = g1.size();
  SignedPermutation out;
  out.perm.resize(n);
  out.sign.resize(n);
  std::vector<int> inv2(n);
  for (std::size_t i = 0; i < n; ++i) inv2[g2.perm[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < n; ++i) {
    out.perm[i] = g2.perm[g1.perm[i]];
    out.sign[i] = g2.sign[i] * g1.sign[inv2[i]];
  }
  return out;
}

std::string to_bracket(const SignedPermutation& g, const std::vector<std::string>& names) {
  if (names.size() != g.size())
    fail(errc::invalid_parameter, "name table size mismatch");
  std::string out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    out += '[';
    std::size_t p = start;
    do {
      seen[p] = true;
      out += names[p];
      out += (g.sign[g.perm[p]] > 0) ? '+' : '-';
      p = static_cast<std::size_t>(g.perm[p]);
    } while (p != start);
    out += ']';
  }
  return out;
}

SignedPermutation from_bracket(const std::string& text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  SignedPermutation g = SignedPermutation::identity(n);
  std::vector<bool> assigned(n, false);

  std::size_t pos = 0;
  auto syntax = [&]() { fail(errc::usage_error, "malformed rule label: " + text); };
  while (pos < text.size()) {
    if (text[pos] != '[') syntax();
    ++pos;
    std::vector<int> cycle;
    std::vector<int> cycle_signs;
    while (pos < text.size() && text[pos] != ']') {
      int point = -1;
      std::size_t best_len = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (names[i].size() > best_len && text.compare(pos, names[i].size(), names[i]) == 0) {
          point = static_cast<int>(i);
          best_len = names[i].size();
        }
      }
      if (point < 0) syntax();
      pos += best_len;
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) syntax();
      cycle.push_back(point);
      cycle_signs.push_back(text[pos] == '+' ? 1 : -1);
      ++pos;
    }
    if (pos >= text.size() || cycle.empty()) syntax();
    ++pos;  // skip ']'
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (assigned[from]) fail(errc::usage_error, "point repeated in label: " + text);
      assigned[from] = true;
      g.perm[from] = to;
      g.sign[to] = cycle_signs[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!assigned[i]) fail(errc::usage_error, "label omits a point: " + text);
  return g;
}

}
