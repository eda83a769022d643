#include "heunkit/heun_transforms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace heunkit {

namespace {

HlRule make_rule(const char* name, const char* label, const char* formula,
                 std::function<HeunParams(const HeunParams&)> pm,
                 std::function<Complex(const HeunParams&, Complex)> am,
                 std::function<Complex(const HeunParams&, Complex)> pre,
                 std::function<Complex(const HeunParams&, Complex)> shadow = {}) {
  HlRule r;
  r.name = name;
  r.label = from_bracket(label, heun_point_names());
  r.formula = formula;
  r.word = {name};
  r.param_map = std::move(pm);
  r.arg_map = std::move(am);
  r.prefactor = std::move(pre);
  r.qbar_shadow = std::move(shadow);
  return r;
}

}  // namespace

std::string HlRule::bracket() const { return to_bracket(label, heun_point_names()); }

const std::vector<std::string>& heun_point_names() {
  static const std::vector<std::string> names = {"1", "a", "inf"};
  return names;
}

std::vector<HlRule> mobius_hl_rules() {
  std::vector<HlRule> rules;

  rules.push_back(make_rule(
      "identity", "[1+][a+][inf+]", "Hl(a,q;alpha,beta;gamma,delta;x)",
      [](const HeunParams& p) { return p; },
      [](const HeunParams&, Complex x) { return x; },
      [](const HeunParams&, Complex) { return Complex(1.0); },
      [](const HeunParams&, Complex qb) { return qb; }));

  rules.push_back(make_rule(
      "swap-1-inf", "[1+inf+][a+]",
      "(1-x)^(-alpha) Hl(a/(a-1),(-q+gamma alpha a)/(a-1);"
      "alpha,alpha-delta+1;gamma,alpha-beta+1;x/(x-1))",
      [](const HeunParams& p) {
        return HeunParams{p.a / (p.a - 1.0),
                          (-p.q + p.gamma * p.alpha * p.a) / (p.a - 1.0),
                          p.alpha, p.alpha - p.delta + 1.0, p.gamma,
                          p.alpha - p.beta + 1.0};
      },
      [](const HeunParams&, Complex x) { return x / (x - 1.0); },
      [](const HeunParams& p, Complex x) { return principal_power(1.0 - x, -p.alpha); },
      [](const HeunParams& p, Complex qb) { return (p.a - qb) / (p.a - 1.0); }));

  rules.push_back(make_rule(
      "swap-a-inf", "[1+][a+inf+]",
      "(1-x/a)^(-alpha) Hl(1-a,-q+gamma alpha;"
      "alpha,-beta+gamma+delta;gamma,delta;(1-a)x/(x-a))",
      [](const HeunParams& p) {
        return HeunParams{1.0 - p.a, -p.q + p.gamma * p.alpha, p.alpha,
                          -p.beta + p.gamma + p.delta, p.gamma, p.delta};
      },
      [](const HeunParams& p, Complex x) { return (1.0 - p.a) * x / (x - p.a); },
      [](const HeunParams& p, Complex x) {
        return principal_power(1.0 - x / p.a, -p.alpha);
      },
      [](const HeunParams&, Complex qb) { return 1.0 - qb; }));

  rules.push_back(make_rule(
      "swap-1-a", "[1+a+][inf+]",
      "Hl(1/a,q/a;alpha,beta;gamma,alpha+beta-gamma-delta+1;x/a)",
      [](const HeunParams& p) {
        return HeunParams{1.0 / p.a, p.q / p.a, p.alpha, p.beta, p.gamma, p.epsilon()};
      },
      [](const HeunParams& p, Complex x) { return x / p.a; },
      [](const HeunParams&, Complex) { return Complex(1.0); },
      [](const HeunParams& p, Complex qb) { return qb / p.a; }));

  rules.push_back(make_rule(
      "cycle-1-a-inf", "[1+a+inf+]",
      "(1-x/a)^(-alpha) Hl(1/(1-a),(q-gamma alpha)/(a-1);"
      "alpha,-beta+gamma+delta;gamma,alpha-beta+1;x/(x-a))",
      [](const HeunParams& p) {
        return HeunParams{1.0 / (1.0 - p.a), (p.q - p.gamma * p.alpha) / (p.a - 1.0),
                          p.alpha, -p.beta + p.gamma + p.delta, p.gamma,
                          p.alpha - p.beta + 1.0};
      },
      [](const HeunParams& p, Complex x) { return x / (x - p.a); },
      [](const HeunParams& p, Complex x) {
        return principal_power(1.0 - x / p.a, -p.alpha);
      },
      [](const HeunParams& p, Complex qb) { return (1.0 - qb) / (1.0 - p.a); }));

  rules.push_back(make_rule(
      "cycle-1-inf-a", "[1+inf+a+]",
      "(1-x)^(-alpha) Hl((a-1)/a,(-q+gamma alpha a)/a;"
      "alpha,alpha-delta+1;gamma,alpha+beta-gamma-delta+1;(a-1)x/(a(x-1)))",
      [](const HeunParams& p) {
        return HeunParams{(p.a - 1.0) / p.a, (-p.q + p.gamma * p.alpha * p.a) / p.a,
                          p.alpha, p.alpha - p.delta + 1.0, p.gamma, p.epsilon()};
      },
      [](const HeunParams& p, Complex x) {
        return (p.a - 1.0) * x / (p.a * (x - 1.0));
      },
      [](const HeunParams& p, Complex x) { return principal_power(1.0 - x, -p.alpha); },
      [](const HeunParams& p, Complex qb) { return (p.a - qb) / p.a; }));

  return rules;
}

HlRule fhomotopy_hl_rule_at_1() {
  return make_rule(
      "twist-1-inf", "[1-][a+][inf-]",
      "(1-x)^(1-delta) Hl(a,q-(delta-1)gamma a;"
      "beta-delta+1,alpha-delta+1;gamma,2-delta;x)",
      [](const HeunParams& p) {
        return HeunParams{p.a, p.q - (p.delta - 1.0) * p.gamma * p.a,
                          p.beta - p.delta + 1.0, p.alpha - p.delta + 1.0, p.gamma,
                          2.0 - p.delta};
      },
      [](const HeunParams&, Complex x) { return x; },
      [](const HeunParams& p, Complex x) {
        return principal_power(1.0 - x, 1.0 - p.delta);
      });
}

std::vector<HlRule> hl_generators() {
  std::vector<HlRule> rules = mobius_hl_rules();
  rules.push_back(fhomotopy_hl_rule_at_1());
  return rules;
}

HlRule compose_hl_rules(const HlRule& r1, const HlRule& r2) {
  HlRule out;
  out.label = compose(r2.label, r1.label);
  out.name = r1.name + "*" + r2.name;
  out.word = r1.word;
  out.word.insert(out.word.end(), r2.word.begin(), r2.word.end());
  out.param_map = [pm1 = r1.param_map, pm2 = r2.param_map](const HeunParams& p) {
    return pm2(pm1(p));
  };
  out.arg_map = [am1 = r1.arg_map, am2 = r2.arg_map,
                 pm1 = r1.param_map](const HeunParams& p, Complex x) {
    return am2(pm1(p), am1(p, x));
  };
  out.prefactor = [pre1 = r1.prefactor, pre2 = r2.prefactor, pm1 = r1.param_map,
                   am1 = r1.arg_map](const HeunParams& p, Complex x) {
    return pre1(p, x) * pre2(pm1(p), am1(p, x));
  };
  return out;
}

bool hl_rules_probe_equal(const HlRule& u, const HlRule& v) {
  const HeunParams probes[2] = {
      {{2.2, 0.7}, {0.41, -0.23}, {0.31, 0.21}, {-0.56, 0.13}, {1.23, -0.41}, {0.67, 0.29}},
      {{-1.7, 1.1}, {-0.35, 0.5}, {0.83, -0.32}, {0.12, 0.44}, {0.52, 0.19}, {-0.61, -0.23}},
  };
  const Complex xs[5] = {{0.03, 0.02}, {-0.04, 0.01}, {0.01, -0.05}, {-0.02, -0.03}, {0.05, 0.0}};
  for (const auto& p : probes) {
    const HeunParams pu = u.param_map(p), pv = v.param_map(p);
    const double dp = std::abs(pu.a - pv.a) + std::abs(pu.q - pv.q) +
                      std::abs(pu.alpha - pv.alpha) + std::abs(pu.beta - pv.beta) +
                      std::abs(pu.gamma - pv.gamma) + std::abs(pu.delta - pv.delta);
    if (dp > 1e-8) return false;
    for (const auto& x : xs) {
      if (std::abs(u.arg_map(p, x) - v.arg_map(p, x)) > 1e-8) return false;
      if (std::abs(u.prefactor(p, x) - v.prefactor(p, x)) > 1e-8) return false;
    }
  }
  return true;
}

std::vector<HlRule> generate_hl_group() {
  std::vector<HlRule> closed;
  std::deque<HlRule> queue;
  for (auto& g : hl_generators()) queue.push_back(std::move(g));
  while (!queue.empty()) {
    HlRule next = std::move(queue.front());
    queue.pop_front();
    if (const HlRule* existing = find_hl_rule(closed, next.label)) {
      if (!hl_rules_probe_equal(*existing, next))
        fail(errc::closure_error, "label collision with numerically distinct maps");
      continue;
    }
    for (const auto& r : closed) {
      queue.push_back(compose_hl_rules(next, r));
      queue.push_back(compose_hl_rules(r, next));
    }
    queue.push_back(compose_hl_rules(next, next));
    closed.push_back(std::move(next));
    if (closed.size() > 24)
      fail(errc::closure_error, "closure exceeded the expected 24 elements");
  }
  if (closed.size() != 24)
    fail(errc::closure_error, "closure stabilized short of 24 elements");
  for (const auto& r : closed)
    if (!r.label.even_signed())
      fail(errc::closure_error, "odd-signed label in the closure");
  std::sort(closed.begin(), closed.end(),
            [](const HlRule& u, const HlRule& v) { return u.bracket() < v.bracket(); });
  return closed;
}

EvalResult apply_hl_rule(const HlRule& r, const HeunParams& p, Complex x,
                         const EvalPolicy& policy) {
  const HeunParams target = r.param_map(p);
  target.validate();
  const Complex arg = r.arg_map(p, x);
  const Complex pre = r.prefactor(p, x);
  EvalResult inner = eval_hl(target, arg, policy);
  return {pre * inner.value, std::abs(pre) * inner.err_estimate, inner.terms_used};
}

const HlRule* find_hl_rule(const std::vector<HlRule>& rules, const SignedPermutation& label) {
  for (const auto& r : rules)
    if (r.label == label) return &r;
  return nullptr;
}

Complex qbar_of(const HeunParams& p) {
  if (std::abs(p.alpha) <= integer_guard_tol || std::abs(p.beta) <= integer_guard_tol)
    fail(errc::degenerate_error, "normalized accessory parameter needs alpha, beta != 0");
  if (std::abs(p.alpha - p.gamma + 1.0) <= integer_guard_tol)
    fail(errc::degenerate_error, "normalized accessory parameter needs alpha - gamma + 1 != 0");
  const Complex big_q = p.q / (p.alpha * p.beta);
  return (p.beta * big_q + (p.epsilon() - p.beta) * p.a + (p.delta - p.beta)) /
         (p.alpha - p.gamma + 1.0);
}

Complex q_from_qbar(Complex qbar, const HeunParams& shape) {
  if (std::abs(shape.alpha) <= integer_guard_tol || std::abs(shape.beta) <= integer_guard_tol)
    fail(errc::degenerate_error, "normalized accessory parameter needs alpha, beta != 0");
  const Complex big_q = (qbar * (shape.alpha - shape.gamma + 1.0) -
                         (shape.epsilon() - shape.beta) * shape.a -
                         (shape.delta - shape.beta)) /
                        shape.beta;
  return shape.alpha * shape.beta * big_q;
}

LocalSolutionAtA local_solution_at_a(const HeunParams& p) {
  p.validate();
  LocalSolutionAtA out;
  out.params = HeunParams{(p.a - 1.0) / p.a, (-p.q + p.beta * p.alpha * p.a) / p.a,
                          p.alpha, p.beta, p.epsilon(), p.gamma};
  out.params.validate();
  return out;
}

EvalResult eval_local_at_a(const HeunParams& p, Complex x, const EvalPolicy& policy) {
  const LocalSolutionAtA local = local_solution_at_a(p);
  return eval_hl(local.params, (p.a - x) / p.a, policy);
}

HeunParams derivative_target(const HeunParams& p, std::size_t n) {
  const double nd = static_cast<double>(n);
  if (std::abs(p.alpha - (1.0 - nd)) > integer_guard_tol)
    fail(errc::invalid_parameter, "derivative identity needs alpha = 1 - N");
  const Complex qp = p.q + nd * (nd - 1.0) * (p.a + 1.0) +
                     nd * ((p.a + 1.0) * p.gamma + p.a * p.delta + p.epsilon());
  return HeunParams{p.a, qp, 1.0 + nd, p.beta + nd, p.gamma + nd, p.delta + nd};
}

double derivative_identity_residual(const HeunParams& p, std::size_t n,
                                    std::size_t n_terms) {
  const HeunParams target = derivative_target(p, n);
  const CoefficientSequence left = series_derivative(heun_coeffs(p, n_terms + n), n);
  const CoefficientSequence right = heun_coeffs(target, n_terms);
  if (std::abs(left[0]) <= 1e-250)
    fail(errc::zero_leading_coefficient, "derivative series starts with zero");
  const Complex constant = left[0];  // right[0] == 1
  double residual = 0.0;
  for (std::size_t k = 0; k <= n_terms; ++k) {
    const Complex want = constant * right[k];
    const double scale = std::max(std::abs(left[k]), std::abs(want));
    if (scale <= 1e-250) continue;
    residual = std::max(residual, std::abs(left[k] - want) / scale);
  }
  return residual;
}

}
