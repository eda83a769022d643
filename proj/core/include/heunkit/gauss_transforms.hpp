#pragma once

#include <functional>
#include <string>
#include <vector>

#include "heunkit/series.hpp"
#include "heunkit/signed_permutation.hpp"
#include "heunkit/types.hpp"

namespace heunkit {

// A 2F1 transformation identity
//
//   2F1(p; x) = prefactor(p, x) * 2F1(param_map(p); arg_map(x)),
//
// indexed by a signed permutation of the singular points {1, inf}.
struct GaussRule {
  SignedPermutation label;
  std::string name;
  std::string formula;
  std::vector<std::string> word;  // generator names, application order
  std::function<GaussParams(const GaussParams&)> param_map;
  std::function<Complex(Complex)> arg_map;
  std::function<Complex(const GaussParams&, Complex)> prefactor;

  std::string bracket() const;
};

const std::vector<std::string>& gauss_point_names();

// The classical eight-element catalog.  With include_swap = false, only the
// four rules fixing the order of the numerator parameters (the even-signed
// subgroup, a Klein four-group); with true, all eight.
std::vector<GaussRule> kummer_rules(bool include_swap = true);

// r1 applied first, then r2 to the transformed function.
GaussRule compose_gauss_rules(const GaussRule& r1, const GaussRule& r2);

// Right-hand side of the rule's identity at (p, x).
EvalResult apply_gauss_rule(const GaussRule& r, const GaussParams& p, Complex x,
                            const EvalPolicy& policy = {});

// Closure of the given rules under composition, deduplicated by label.
// Label collisions are cross-checked numerically at fixed probe points;
// disagreement raises closure_error.
std::vector<GaussRule> gauss_closure(const std::vector<GaussRule>& generators);

const GaussRule* find_gauss_rule(const std::vector<GaussRule>& rules,
                                 const SignedPermutation& label);

}
