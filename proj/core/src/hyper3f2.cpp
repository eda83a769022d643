#include "heunkit/hyper3f2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <utility>

#include "heunkit/error.hpp"

namespace heunkit {

namespace {

constexpr double kMapGuardTol = 1e-8;

Complex one_minus_pow(Complex x, Complex mu) { return principal_power(1.0 - x, mu); }

void require_nonzero(Complex z, const char* what) {
  if (std::abs(z) <= kMapGuardTol)
    fail(errc::singular_map, std::string("e-map degenerates: ") + what + " vanishes");
}

Restricted3F2Params validated_image(Restricted3F2Params out) {
  try {
    out.validate();
  } catch (const error& err) {
    fail(errc::singular_map,
         std::string("transformed parameters leave the family: ") + err.what());
  }
  return out;
}

F32Rule make_rule(const char* name, const char* label, const char* formula,
                  std::function<Restricted3F2Params(const Restricted3F2Params&)> pm,
                  std::function<Complex(Complex)> am,
                  std::function<Complex(const Restricted3F2Params&, Complex)> pre) {
  F32Rule r;
  r.name = name;
  r.label = from_bracket(label, f32_point_names());
  r.formula = formula;
  r.word = {name};
  r.param_map = std::move(pm);
  r.arg_map = std::move(am);
  r.prefactor = std::move(pre);
  return r;
}

// Numeric agreement of two rules claiming the same label.
bool rules_agree(const F32Rule& u, const F32Rule& v) {
  const Restricted3F2Params probes[2] = {
      {{0.62, 0.21}, {-0.48, 0.37}, {1.37, -0.29}, {0.83, 0.44}},
      {{-0.35, -0.18}, {0.91, 0.52}, {-0.72, 0.63}, {1.24, -0.37}},
  };
  const Complex xs[5] = {
      {0.11, 0.07}, {-0.09, 0.13}, {0.05, -0.16}, {-0.14, -0.04}, {0.17, 0.02}};
  for (const auto& p : probes) {
    const Restricted3F2Params pu = u.param_map(p), pv = v.param_map(p);
    if (std::abs(pu.a1 - pv.a1) + std::abs(pu.a2 - pv.a2) + std::abs(pu.b1 - pv.b1) +
            std::abs(pu.e - pv.e) >
        1e-9)
      return false;
    for (const auto& x : xs) {
      if (std::abs(u.arg_map(x) - v.arg_map(x)) > 1e-9) return false;
      if (std::abs(u.prefactor(p, x) - v.prefactor(p, x)) > 1e-9) return false;
    }
  }
  return true;
}

}  // namespace

void Restricted3F2Params::validate() const {
  if (std::abs(e) <= kMapGuardTol)
    fail(errc::invalid_parameter, "family parameter e must be nonzero");
  if (is_nonpositive_integer(b1))
    fail(errc::invalid_parameter, "lower parameter b1 is a nonpositive integer");
  if (is_nonpositive_integer(e))
    fail(errc::invalid_parameter, "lower parameter e is a nonpositive integer");
}

F32TransformResult pfaff_like(const Restricted3F2Params& p) {
  p.validate();
  require_nonzero(p.a2, "upper parameter a2");
  require_nonzero(p.b1 - p.a2 - 1.0, "image upper parameter b1 - a2 - 1");
  require_nonzero(p.e - p.a2, "the e-map denominator e - a2");
  F32TransformResult out;
  out.params = validated_image(Restricted3F2Params{
      p.a1, p.b1 - p.a2 - 1.0, p.b1, pfaff_e_map(p).apply(p.e)});
  out.prefactor_exponent = -p.a1;
  out.pfaff_argument = true;
  return out;
}

F32TransformResult euler_like(const Restricted3F2Params& p) {
  p.validate();
  require_nonzero(p.a1, "upper parameter a1");
  require_nonzero(p.a2, "upper parameter a2");
  require_nonzero(p.b1 - p.a1 - 1.0, "image upper parameter b1 - a1 - 1");
  require_nonzero(p.b1 - p.a2 - 1.0, "image upper parameter b1 - a2 - 1");
  require_nonzero((p.b1 - p.a1 - p.a2 - 1.0) * p.e + p.a1 * p.a2,
                  "the e-map denominator");
  F32TransformResult out;
  out.params = validated_image(Restricted3F2Params{
      p.b1 - p.a1 - 1.0, p.b1 - p.a2 - 1.0, p.b1, euler_e_map(p).apply(p.e)});
  out.prefactor_exponent = p.b1 - p.a1 - p.a2 - 1.0;
  out.pfaff_argument = false;
  return out;
}

LowerTriangularEMap pfaff_e_map(const Restricted3F2Params& p) {
  return LowerTriangularEMap{p.b1 - p.a2 - 1.0, Complex(1.0), -p.a2};
}

LowerTriangularEMap euler_e_map(const Restricted3F2Params& p) {
  return LowerTriangularEMap{(p.b1 - p.a1 - 1.0) * (p.b1 - p.a2 - 1.0),
                             p.b1 - p.a1 - p.a2 - 1.0, p.a1 * p.a2};
}

std::string F32Rule::bracket() const { return to_bracket(label, f32_point_names()); }

const std::vector<std::string>& f32_point_names() {
  static const std::vector<std::string> names = {"1", "inf"};
  return names;
}

std::vector<F32Rule> restricted_rules(bool include_swap) {
  const auto id_arg = [](Complex x) { return x; };
  const auto ratio_arg = [](Complex x) { return x / (x - 1.0); };
  const auto unit_pre = [](const Restricted3F2Params&, Complex) { return Complex(1.0); };

  std::vector<F32Rule> rules;
  rules.push_back(make_rule(
      "identity", "[1+][inf+]", "3F2(a1,a2,e+1;b1,e;x)",
      [](const Restricted3F2Params& p) { return p; }, id_arg, unit_pre));
  rules.push_back(make_rule(
      "pfaff-like", "[1+inf+]",
      "(1-x)^(-a1) 3F2(a1,b1-a2-1,e'+1;b1,e';x/(x-1)), e' = (b1-a2-1)e/(e-a2)",
      [](const Restricted3F2Params& p) { return pfaff_like(p).params; }, ratio_arg,
      [](const Restricted3F2Params& p, Complex x) { return one_minus_pow(x, -p.a1); }));
  rules.push_back(make_rule(
      "euler-like", "[1-][inf-]",
      "(1-x)^(b1-a1-a2-1) 3F2(b1-a1-1,b1-a2-1,e''+1;b1,e'';x), "
      "e'' = (b1-a1-1)(b1-a2-1)e/((b1-a1-a2-1)e+a1a2)",
      [](const Restricted3F2Params& p) { return euler_like(p).params; }, id_arg,
      [](const Restricted3F2Params& p, Complex x) {
        return one_minus_pow(x, p.b1 - p.a1 - p.a2 - 1.0);
      }));
  if (include_swap)
    rules.push_back(make_rule(
        "swap", "[1+][inf-]", "3F2(a2,a1,e+1;b1,e;x)",
        [](const Restricted3F2Params& p) {
          return Restricted3F2Params{p.a2, p.a1, p.b1, p.e};
        },
        id_arg, unit_pre));
  return rules;
}

F32Rule compose_f32_rules(const F32Rule& r1, const F32Rule& r2) {
  F32Rule out;
  out.label = compose(r2.label, r1.label);
  out.name = r1.name + "*" + r2.name;
  out.word = r1.word;
  out.word.insert(out.word.end(), r2.word.begin(), r2.word.end());
  out.param_map = [pm1 = r1.param_map,
                   pm2 = r2.param_map](const Restricted3F2Params& p) {
    return pm2(pm1(p));
  };
  out.arg_map = [am1 = r1.arg_map, am2 = r2.arg_map](Complex x) { return am2(am1(x)); };
  out.prefactor = [pre1 = r1.prefactor, pre2 = r2.prefactor, pm1 = r1.param_map,
                   am1 = r1.arg_map](const Restricted3F2Params& p, Complex x) {
    return pre1(p, x) * pre2(pm1(p), am1(x));
  };
  return out;
}

std::vector<F32Rule> restricted_closure(bool include_swap) {
  std::vector<F32Rule> closed;
  std::deque<F32Rule> queue;
  for (auto& r : restricted_rules(include_swap)) queue.push_back(std::move(r));
  while (!queue.empty()) {
    F32Rule next = std::move(queue.front());
    queue.pop_front();
    if (const F32Rule* existing = find_f32_rule(closed, next.label)) {
      if (!rules_agree(*existing, next))
        fail(errc::closure_error, "label collision with numerically distinct maps");
      continue;
    }
    for (const auto& r : closed) {
      queue.push_back(compose_f32_rules(next, r));
      queue.push_back(compose_f32_rules(r, next));
    }
    queue.push_back(compose_f32_rules(next, next));
    closed.push_back(std::move(next));
    if (closed.size() > 16) fail(errc::closure_error, "closure did not stabilize");
  }
  const std::size_t expected = include_swap ? 8 : 4;
  if (closed.size() != expected)
    fail(errc::closure_error, "closure has unexpected order");
  std::sort(closed.begin(), closed.end(),
            [](const F32Rule& u, const F32Rule& v) { return u.bracket() < v.bracket(); });
  return closed;
}

const F32Rule* find_f32_rule(const std::vector<F32Rule>& rules,
                             const SignedPermutation& label) {
  for (const auto& r : rules)
    if (r.label == label) return &r;
  return nullptr;
}

EvalResult apply_f32_rule(const F32Rule& r, const Restricted3F2Params& p, Complex x,
                          const EvalPolicy& policy) {
  const Restricted3F2Params target = r.param_map(p);
  const Complex arg = r.arg_map(x);
  const Complex pre = r.prefactor(p, x);
  EvalResult inner = eval_3f2(target.full(), arg, policy);
  return {pre * inner.value, std::abs(pre) * inner.err_estimate, inner.terms_used};
}

double f32_rule_residual(const F32Rule& r, const Restricted3F2Params& p, Complex x,
                         const EvalPolicy& policy) {
  const Complex lhs = eval_3f2(p.full(), x, policy).value;
  const Complex rhs = apply_f32_rule(r, p, x, policy).value;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

const char* poisedness_name(Poisedness p) noexcept {
  switch (p) {
    case Poisedness::general: return "general";
    case Poisedness::nearly: return "nearly";
    case Poisedness::nearly_very_well: return "nearly_very_well";
    case Poisedness::well: return "well";
    case Poisedness::very_well: return "very_well";
  }
  return "general";
}

Poisedness classify_poisedness(const ThreeF2Params& p, double tol) {
  std::array<Complex, 3> uppers = {p.a1, p.a2, p.a3};
  std::array<Complex, 2> lowers = {p.b1, p.b2};
  std::array<std::size_t, 3> iu = {0, 1, 2};
  Poisedness best = Poisedness::general;
  const auto near = [tol](Complex u, Complex v) { return std::abs(u - v) <= tol; };
  std::sort(iu.begin(), iu.end());
  do {
    const Complex u1 = uppers[iu[0]], u2 = uppers[iu[1]], u3 = uppers[iu[2]];
    for (int flip = 0; flip < 2; ++flip) {
      const Complex l1 = flip ? lowers[1] : lowers[0];
      const Complex l2 = flip ? lowers[0] : lowers[1];
      const Complex s = u1 + 1.0;
      const bool eq1 = near(u2 + l1, s);
      const bool eq2 = near(u3 + l2, s);
      Poisedness tag = Poisedness::general;
      if (eq1 && eq2)
        tag = (near(l1, u1 / 2.0) || near(l2, u1 / 2.0)) ? Poisedness::very_well
                                                         : Poisedness::well;
      else if (eq1)
        tag = near(l1, u1 / 2.0) ? Poisedness::nearly_very_well : Poisedness::nearly;
      if (static_cast<int>(tag) > static_cast<int>(best)) best = tag;
    }
  } while (std::next_permutation(iu.begin(), iu.end()));
  return best;
}

double bailey_slater_check(Complex a1, Complex a2, Complex b1, Complex x,
                           const EvalPolicy& policy) {
  const ThreeF2Params lhs_params{a1, a2, -a2 + 1.0, b1, -a2};
  const ThreeF2Params rhs_params{a1, b1 - a2 - 1.0, (b1 - a2 + 1.0) / 2.0, b1,
                                 (b1 - a2 - 1.0) / 2.0};
  const Complex lhs = eval_3f2(lhs_params, x, policy).value;
  const Complex rhs =
      one_minus_pow(x, -a1) * eval_3f2(rhs_params, x / (x - 1.0), policy).value;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

Complex reduction_e(Complex a1, Complex a2, Complex b1) {
  const Complex den = a1 + a2 - b1 + 1.0;
  if (std::abs(den) <= kMapGuardTol)
    fail(errc::degenerate_error, "the reduction e has a vanishing denominator");
  return a1 * a2 / den;
}

ReduceTo2F1 reduce_to_2f1(Complex a1, Complex a2, Complex b1, Complex x,
                          const EvalPolicy& policy) {
  const Complex e = reduction_e(a1, a2, b1);
  Restricted3F2Params member{a1, a2, b1, e};
  member.validate();
  ReduceTo2F1 out;
  out.lhs = eval_3f2(member.full(), x, policy).value;
  out.rhs =
      (1.0 - x) * eval_2f1(GaussParams{a1 + 1.0, a2 + 1.0, b1}, x, policy).value;
  return out;
}

double very_well_poised_residual(Complex alpha, Complex beta, Complex x,
                                 const EvalPolicy& policy) {
  const ThreeF2Params lhs_params{alpha, beta, alpha / 2.0 + 1.0, alpha - beta + 1.0,
                                 alpha / 2.0};
  const Complex lhs = eval_3f2(lhs_params, x, policy).value;
  const Complex rhs =
      (1.0 - x) *
      eval_2f1(GaussParams{alpha + 1.0, beta + 1.0, alpha - beta + 1.0}, x, policy)
          .value;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

namespace {

Complex involution_side_value(Complex alpha, Complex beta, Complex x,
                              const EvalPolicy& policy) {
  const ThreeF2Params params{2.0 * alpha - 1.0, alpha - beta - 0.5, alpha + 0.5,
                             alpha + beta + 0.5, alpha - 0.5};
  return one_minus_pow(x, 2.0 * alpha - 1.0) * eval_3f2(params, x, policy).value;
}

}  // namespace

double bailey_involution_check(Complex alpha, Complex beta, Complex x,
                               const EvalPolicy& policy) {
  const Complex lhs = involution_side_value(alpha, beta, x, policy);
  const Complex rhs = involution_side_value(beta, alpha, x, policy);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

StableFamilyMember stable_family_member(Complex alpha, Complex beta, Complex s,
                                        Complex t) {
  if (std::abs(alpha - beta - 0.5) <= kMapGuardTol)
    fail(errc::degenerate_error, "family parameter e requires alpha - beta != 1/2");
  const Complex u2 = (1.0 - s) * alpha - (1.0 + s) * beta - (0.5 - t);
  const Complex b1 = (1.0 - s) * alpha + (1.0 - s) * beta + (0.5 + t);
  const Complex e = (alpha - 0.5) * u2 / (alpha - beta - 0.5);
  StableFamilyMember m;
  m.params = Restricted3F2Params{2.0 * alpha - 1.0, u2, b1, e};
  m.params.validate();
  m.prefactor_exponent = 2.0 * alpha - 1.0;
  return m;
}

Complex eval_family_member(const StableFamilyMember& m, Complex x,
                           const EvalPolicy& policy) {
  return one_minus_pow(x, m.prefactor_exponent) *
         eval_3f2(m.params.full(), x, policy).value;
}

double family_stability_check(Complex alpha, Complex beta, Complex s, Complex t,
                              Complex x, const EvalPolicy& policy) {
  const Complex lhs = eval_family_member(stable_family_member(alpha, beta, s, t), x,
                                         policy);
  const Complex rhs = eval_family_member(stable_family_member(beta, alpha, s, t), x,
                                         policy);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

PSymbol involution_side_symbol(Complex alpha, Complex beta) {
  const ThreeF2Params params{2.0 * alpha - 1.0, alpha - beta - 0.5, alpha + 0.5,
                             alpha + beta + 0.5, alpha - 0.5};
  // Fold the (1-x)^(2 alpha - 1) weight into the symbol: exponents at 1 rise
  // by 2 alpha - 1 and at infinity drop by the same amount.
  return f_homotopy(clausen_symbol(params), Complex(1.0), -(2.0 * alpha - 1.0));
}

}
