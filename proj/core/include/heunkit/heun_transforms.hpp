#pragma once

#include <functional>
#include <string>
#include <vector>

#include "heunkit/series.hpp"
#include "heunkit/signed_permutation.hpp"
#include "heunkit/types.hpp"

namespace heunkit {

// A local Heun transformation identity
//
//   Hl(p; x) = prefactor(p, x) * Hl(param_map(p); arg_map(p, x)),
//
// indexed by a signed permutation of the singular points {1, a, inf}
// (the point 0 is fixed by every rule; its exponents are never negated).
struct HlRule {
  SignedPermutation label;
  std::string name;
  std::string formula;
  std::vector<std::string> word;  // generator names, application order
  std::function<HeunParams(const HeunParams&)> param_map;
  std::function<Complex(const HeunParams&, Complex)> arg_map;
  std::function<Complex(const HeunParams&, Complex)> prefactor;
  // For the fractional-linear generators: the induced affine map on the
  // normalized accessory parameter, in terms of the source a.  Empty for
  // other rules.
  std::function<Complex(const HeunParams&, Complex)> qbar_shadow;

  std::string bracket() const;
};

const std::vector<std::string>& heun_point_names();

// The six substitution rules x -> M(x) preserving the singular point 0.
std::vector<HlRule> mobius_hl_rules();
// Index shift at x = 1: multiplication by (1-x)^(1-delta).
HlRule fhomotopy_hl_rule_at_1();
// All seven generators above.
std::vector<HlRule> hl_generators();

// r1 applied first, then r2.
HlRule compose_hl_rules(const HlRule& r1, const HlRule& r2);

// Closure of the seven generators: exactly 24 rules, all with even-signed
// labels, sorted by bracket string.  Label collisions during closure are
// cross-checked numerically; disagreement raises closure_error.
std::vector<HlRule> generate_hl_group();

EvalResult apply_hl_rule(const HlRule& r, const HeunParams& p, Complex x,
                         const EvalPolicy& policy = {});

const HlRule* find_hl_rule(const std::vector<HlRule>& rules, const SignedPermutation& label);

// Numeric agreement of the two rules' maps at fixed probe points.
bool hl_rules_probe_equal(const HlRule& u, const HlRule& v);

// --- normalized accessory parameter ---------------------------------------

// qbar = (beta Q + (epsilon - beta) a + (delta - beta)) / (alpha - gamma + 1)
// with Q = q / (alpha beta).  Requires alpha, beta, alpha - gamma + 1 to be
// bounded away from zero.
Complex qbar_of(const HeunParams& p);
// Inverse: the q giving qbar_of == qbar with shape.q ignored.
Complex q_from_qbar(Complex qbar, const HeunParams& shape);

// --- local solution at x = a -----------------------------------------------

// The exponent-zero local solution at x = a, expressed as a Heun series in
// u = (a - x)/a; normalized to 1 at x = a.
struct LocalSolutionAtA {
  HeunParams params;
};
LocalSolutionAtA local_solution_at_a(const HeunParams& p);
EvalResult eval_local_at_a(const HeunParams& p, Complex x, const EvalPolicy& policy = {});

// --- derivative identity ----------------------------------------------------

// Target parameters under N-fold differentiation when alpha = 1 - N:
// q' = q + N(N-1)(a+1) + N((a+1) gamma + a delta + epsilon), exponents
// (1+N, beta+N; gamma+N, delta+N).
HeunParams derivative_target(const HeunParams& p, std::size_t n);

// Max relative coefficient deviation between the N-th derivative series of
// Hl(p) and the constant multiple of Hl(derivative_target(p, N)).
double derivative_identity_residual(const HeunParams& p, std::size_t n,
                                    std::size_t n_terms = 48);

}
