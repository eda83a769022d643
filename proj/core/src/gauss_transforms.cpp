#include "heunkit/gauss_transforms.hpp"

#include <cmath>
#include <deque>

namespace heunkit {

namespace {

Complex one_minus_pow(Complex x, Complex mu) { return principal_power(1.0 - x, mu); }

GaussRule make_rule(const char* name, const char* label, const char* formula,
                    std::function<GaussParams(const GaussParams&)> pm,
                    std::function<Complex(Complex)> am,
                    std::function<Complex(const GaussParams&, Complex)> pre) {
  GaussRule r;
  r.name = name;
  r.label = from_bracket(label, gauss_point_names());
  r.formula = formula;
  r.word = {name};
  r.param_map = std::move(pm);
  r.arg_map = std::move(am);
  r.prefactor = std::move(pre);
  return r;
}

// Numeric agreement of two rules claiming the same label.
bool rules_agree(const GaussRule& u, const GaussRule& v) {
  const GaussParams probes[2] = {
      {{0.31, 0.12}, {-0.77, 0.45}, {1.41, -0.23}},
      {{-0.52, 0.33}, {0.94, -0.18}, {0.63, 0.27}},
  };
  const Complex xs[5] = {{0.11, 0.07}, {-0.09, 0.13}, {0.05, -0.16}, {-0.14, -0.04}, {0.17, 0.02}};
  for (const auto& p : probes) {
    const GaussParams pu = u.param_map(p), pv = v.param_map(p);
    if (std::abs(pu.alpha - pv.alpha) + std::abs(pu.beta - pv.beta) +
            std::abs(pu.gamma - pv.gamma) > 1e-9)
      return false;
    for (const auto& x : xs) {
      if (std::abs(u.arg_map(x) - v.arg_map(x)) > 1e-9) return false;
      if (std::abs(u.prefactor(p, x) - v.prefactor(p, x)) > 1e-9) return false;
    }
  }
  return true;
}

}  // namespace

std::string GaussRule::bracket() const { return to_bracket(label, gauss_point_names()); }

const std::vector<std::string>& gauss_point_names() {
  static const std::vector<std::string> names = {"1", "inf"};
  return names;
}

std::vector<GaussRule> kummer_rules(bool include_swap) {
  const auto id_arg = [](Complex x) { return x; };
  const auto ratio_arg = [](Complex x) { return x / (x - 1.0); };
  const auto unit_pre = [](const GaussParams&, Complex) { return Complex(1.0); };

  std::vector<GaussRule> rules;
  rules.push_back(make_rule(
      "identity", "[1+][inf+]", "2F1(alpha,beta;gamma;x)",
      [](const GaussParams& p) { return p; }, id_arg, unit_pre));
  rules.push_back(make_rule(
      "euler", "[1-][inf-]",
      "(1-x)^(gamma-alpha-beta) 2F1(gamma-alpha,gamma-beta;gamma;x)",
      [](const GaussParams& p) {
        return GaussParams{p.gamma - p.alpha, p.gamma - p.beta, p.gamma};
      },
      id_arg,
      [](const GaussParams& p, Complex x) {
        return one_minus_pow(x, p.gamma - p.alpha - p.beta);
      }));
  rules.push_back(make_rule(
      "pfaff", "[1+inf+]", "(1-x)^(-alpha) 2F1(alpha,gamma-beta;gamma;x/(x-1))",
      [](const GaussParams& p) { return GaussParams{p.alpha, p.gamma - p.beta, p.gamma}; },
      ratio_arg,
      [](const GaussParams& p, Complex x) { return one_minus_pow(x, -p.alpha); }));
  rules.push_back(make_rule(
      "pfaff-twisted", "[1-inf-]", "(1-x)^(-beta) 2F1(gamma-alpha,beta;gamma;x/(x-1))",
      [](const GaussParams& p) { return GaussParams{p.gamma - p.alpha, p.beta, p.gamma}; },
      ratio_arg,
      [](const GaussParams& p, Complex x) { return one_minus_pow(x, -p.beta); }));
  if (!include_swap) return rules;

  rules.push_back(make_rule(
      "swap", "[1+][inf-]", "2F1(beta,alpha;gamma;x)",
      [](const GaussParams& p) { return GaussParams{p.beta, p.alpha, p.gamma}; }, id_arg,
      unit_pre));
  rules.push_back(make_rule(
      "euler-swap", "[1-][inf+]",
      "(1-x)^(gamma-alpha-beta) 2F1(gamma-beta,gamma-alpha;gamma;x)",
      [](const GaussParams& p) {
        return GaussParams{p.gamma - p.beta, p.gamma - p.alpha, p.gamma};
      },
      id_arg,
      [](const GaussParams& p, Complex x) {
        return one_minus_pow(x, p.gamma - p.alpha - p.beta);
      }));
  rules.push_back(make_rule(
      "pfaff-swap", "[1+inf-]", "(1-x)^(-beta) 2F1(beta,gamma-alpha;gamma;x/(x-1))",
      [](const GaussParams& p) { return GaussParams{p.beta, p.gamma - p.alpha, p.gamma}; },
      ratio_arg,
      [](const GaussParams& p, Complex x) { return one_minus_pow(x, -p.beta); }));
  rules.push_back(make_rule(
      "pfaff-twisted-swap", "[1-inf+]",
      "(1-x)^(-alpha) 2F1(gamma-beta,alpha;gamma;x/(x-1))",
      [](const GaussParams& p) { return GaussParams{p.gamma - p.beta, p.alpha, p.gamma}; },
      ratio_arg,
      [](const GaussParams& p, Complex x) { return one_minus_pow(x, -p.alpha); }));
  return rules;
}

GaussRule compose_gauss_rules(const GaussRule& r1, const GaussRule& r2) {
  GaussRule out;
  out.label = compose(r2.label, r1.label);
  out.name = r1.name + "*" + r2.name;
  out.word = r1.word;
  out.word.insert(out.word.end(), r2.word.begin(), r2.word.end());
  out.param_map = [pm1 = r1.param_map, pm2 = r2.param_map](const GaussParams& p) {
    return pm2(pm1(p));
  };
  out.arg_map = [am1 = r1.arg_map, am2 = r2.arg_map](Complex x) { return am2(am1(x)); };
  out.prefactor = [pre1 = r1.prefactor, pre2 = r2.prefactor, pm1 = r1.param_map,
                   am1 = r1.arg_map](const GaussParams& p, Complex x) {
    return pre1(p, x) * pre2(pm1(p), am1(x));
  };
  return out;
}

EvalResult apply_gauss_rule(const GaussRule& r, const GaussParams& p, Complex x,
                            const EvalPolicy& policy) {
  const GaussParams target = r.param_map(p);
  const Complex arg = r.arg_map(x);
  const Complex pre = r.prefactor(p, x);
  EvalResult inner = eval_2f1(target, arg, policy);
  return {pre * inner.value, std::abs(pre) * inner.err_estimate, inner.terms_used};
}

std::vector<GaussRule> gauss_closure(const std::vector<GaussRule>& generators) {
  std::vector<GaussRule> closed;
  std::deque<GaussRule> queue(generators.begin(), generators.end());
  while (!queue.empty()) {
    GaussRule next = std::move(queue.front());
    queue.pop_front();
    if (const GaussRule* existing = find_gauss_rule(closed, next.label)) {
      if (!rules_agree(*existing, next))
        fail(errc::closure_error, "label collision with numerically distinct maps");
      continue;
    }
    for (const auto& r : closed) {
      queue.push_back(compose_gauss_rules(next, r));
      queue.push_back(compose_gauss_rules(r, next));
    }
    queue.push_back(compose_gauss_rules(next, next));
    closed.push_back(std::move(next));
    if (closed.size() > 64)
      fail(errc::closure_error, "closure did not stabilize");
  }
  return closed;
}

const GaussRule* find_gauss_rule(const std::vector<GaussRule>& rules,
                                 const SignedPermutation& label) {
  for (const auto& r : rules)
    if (r.label == label) return &r;
  return nullptr;
}

}
