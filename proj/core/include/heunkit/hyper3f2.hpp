#pragma once

#include <functional>
#include <string>
#include <vector>

#include "heunkit/psymbol.hpp"
#include "heunkit/series.hpp"
#include "heunkit/signed_permutation.hpp"
#include "heunkit/types.hpp"

namespace heunkit {

// The one-parameter-thickened hypergeometric family 3F2(a1, a2, e+1; b1, e; x).
// The third upper and second lower parameters travel in the locked pair
// (e+1, e), so a member is determined by (a1, a2, b1, e).
struct Restricted3F2Params {
  Complex a1;
  Complex a2;
  Complex b1;
  Complex e;

  ThreeF2Params full() const { return ThreeF2Params{a1, a2, e + 1.0, b1, e}; }
  // e != 0 and neither b1 nor e a nonpositive integer.
  void validate() const;
};

// Image of one transformation: new family member, the power of (1 - x) in
// front, and whether the argument moves by x -> x/(x-1).
struct F32TransformResult {
  Restricted3F2Params params;
  Complex prefactor_exponent;
  bool pfaff_argument = false;
};

// 3F2(a1,a2,e+1;b1,e;x) = (1-x)^(-a1) 3F2(a1, b1-a2-1, e'+1; b1, e'; x/(x-1))
// with e' = (b1-a2-1) e / (e - a2).  Raises singular_map when the e-map
// degenerates (a2 or b1-a2-1 vanishing, e = a2) or the image violates the
// family invariants.
F32TransformResult pfaff_like(const Restricted3F2Params& p);

// 3F2(a1,a2,e+1;b1,e;x) = (1-x)^(b1-a1-a2-1) 3F2(b1-a1-1, b1-a2-1, e''+1;
// b1, e''; x) with e'' = (b1-a1-1)(b1-a2-1) e / ((b1-a1-a2-1) e + a1 a2).
F32TransformResult euler_like(const Restricted3F2Params& p);

// Both e-maps have the lower triangular Moebius form e -> A e / (C e + D):
// no constant term upstairs, so e = 0 is a formal fixed point.
struct LowerTriangularEMap {
  Complex num_scale;  // A
  Complex den_scale;  // C
  Complex den_const;  // D

  Complex apply(Complex e) const { return num_scale * e / (den_scale * e + den_const); }
};
LowerTriangularEMap pfaff_e_map(const Restricted3F2Params& p);
LowerTriangularEMap euler_e_map(const Restricted3F2Params& p);

// A transformation identity of the restricted family,
//
//   3F2(p; x) = prefactor(p, x) * 3F2(param_map(p); arg_map(x)),
//
// indexed by a signed permutation of the singular points {1, inf}.  Unlike
// the 2F1 catalog, param_map may raise singular_map on parameters where an
// e-map degenerates.
struct F32Rule {
  SignedPermutation label;
  std::string name;
  std::string formula;
  std::vector<std::string> word;  // generator names, application order
  std::function<Restricted3F2Params(const Restricted3F2Params&)> param_map;
  std::function<Complex(Complex)> arg_map;
  std::function<Complex(const Restricted3F2Params&, Complex)> prefactor;

  std::string bracket() const;
};

const std::vector<std::string>& f32_point_names();

// Generators: identity, the Pfaff-like and Euler-like rules, and (when
// include_swap) the upper-parameter interchange a1 <-> a2.
std::vector<F32Rule> restricted_rules(bool include_swap = true);

// Closure under composition: exactly 4 rules without the swap (a Klein
// four-group whose third nontrivial element is the twisted Pfaff rule) and
// exactly 8 with it.  Any other count raises closure_error.
std::vector<F32Rule> restricted_closure(bool include_swap = true);

F32Rule compose_f32_rules(const F32Rule& r1, const F32Rule& r2);

const F32Rule* find_f32_rule(const std::vector<F32Rule>& rules,
                             const SignedPermutation& label);

// Right-hand side of the rule's identity at (p, x).
EvalResult apply_f32_rule(const F32Rule& r, const Restricted3F2Params& p, Complex x,
                          const EvalPolicy& policy = {});

// |3F2(p; x) - apply_f32_rule(r, p, x)| relative.
double f32_rule_residual(const F32Rule& r, const Restricted3F2Params& p, Complex x,
                         const EvalPolicy& policy = {});

// Poisedness of a general 3F2, strongest tag over all separate permutations
// of the upper and lower parameter lists.  With uppers (u1,u2,u3) and lowers
// (l1,l2): well poised when u1+1 = u2+l1 = u3+l2, nearly poised when only
// the last equality fails; the "very well" refinements additionally require
// a lower parameter equal to u1/2 (for nearly poised, the lower in the
// equality that holds).
enum class Poisedness {
  general = 0,
  nearly = 1,
  nearly_very_well = 2,
  well = 3,
  very_well = 4,
};

const char* poisedness_name(Poisedness p) noexcept;
Poisedness classify_poisedness(const ThreeF2Params& p, double tol = 1e-10);

// Residual of the three-free-parameter Pfaff-like special case at e = -a2:
//   3F2(a1, a2, -a2+1; b1, -a2; x)
//     = (1-x)^(-a1) 3F2(a1, b1-a2-1, (b1-a2+1)/2; b1, (b1-a2-1)/2; x/(x-1)).
double bailey_slater_check(Complex a1, Complex a2, Complex b1, Complex x,
                           const EvalPolicy& policy = {});

// The e for which the family member drops to a single 2F1.
Complex reduction_e(Complex a1, Complex a2, Complex b1);

// lhs = 3F2(a1, a2, e+1; b1, e; x) at e = reduction_e; rhs = (1-x) *
// 2F1(a1+1, a2+1; b1; x).
struct ReduceTo2F1 {
  Complex lhs;
  Complex rhs;
};
ReduceTo2F1 reduce_to_2f1(Complex a1, Complex a2, Complex b1, Complex x,
                          const EvalPolicy& policy = {});

// Residual of the very-well-poised reduction
//   3F2(alpha, beta, alpha/2+1; alpha-beta+1, alpha/2; x)
//     = (1-x) 2F1(alpha+1, beta+1; alpha-beta+1; x).
double very_well_poised_residual(Complex alpha, Complex beta, Complex x,
                                 const EvalPolicy& policy = {});

// One side of the two-parameter involution: parameters and weight of
//   (1-x)^(2 alpha - 1) 3F2(2 alpha - 1, alpha - beta - 1/2, alpha + 1/2;
//                           alpha + beta + 1/2, alpha - 1/2; x),
// whose alpha <-> beta interchange leaves the value fixed.
double bailey_involution_check(Complex alpha, Complex beta, Complex x,
                               const EvalPolicy& policy = {});

// The two-parameter involution sits inside an (s, t)-family of weighted
// members that are stable under alpha <-> beta:
//   (1-x)^(2 alpha - 1) 3F2(2 alpha - 1, u2, e+1; b1, e; x),
//   u2 = (1-s) alpha - (1+s) beta - (1/2 - t),
//   b1 = (1-s) alpha + (1-s) beta + (1/2 + t),
//   e  = (alpha - 1/2) u2 / (alpha - beta - 1/2).
struct StableFamilyMember {
  Restricted3F2Params params;
  Complex prefactor_exponent;  // 2 alpha - 1
};

StableFamilyMember stable_family_member(Complex alpha, Complex beta, Complex s,
                                        Complex t);
Complex eval_family_member(const StableFamilyMember& m, Complex x,
                           const EvalPolicy& policy = {});
double family_stability_check(Complex alpha, Complex beta, Complex s, Complex t,
                              Complex x, const EvalPolicy& policy = {});

// Third-order P-symbol of the weighted involution side: the symbol of its
// 3F2 with the (1-x)^(2 alpha - 1) weight folded in at x = 1 and infinity.
// The two sides share two exponents per column and differ in the third.
PSymbol involution_side_symbol(Complex alpha, Complex beta);

}
