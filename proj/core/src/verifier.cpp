#include "heunkit/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "heunkit/classify.hpp"
#include "heunkit/error.hpp"
#include "heunkit/gauss_transforms.hpp"
#include "heunkit/heun_transforms.hpp"
#include "heunkit/hyper3f2.hpp"
#include "heunkit/psymbol.hpp"
#include "heunkit/quadratic_transforms.hpp"
#include "heunkit/reduction_3f2.hpp"
#include "heunkit/series.hpp"
#include "heunkit/version.hpp"

namespace heunkit {

namespace {

// --- pinned tolerances ------------------------------------------------------

constexpr double kRuleTol = 1e-9;         // transformation identities
constexpr double kNaturalityTol = 1e-10;  // accessory-parameter naturality
constexpr double kReductionTol = 1e-10;   // Hl vs 3F2, representations, contiguity
constexpr double kExactTol = 1e-12;       // algebraic/curve/factorization residuals
constexpr double kOffCurveFloor = 1e-6;   // perturbed controls must exceed this
constexpr double kFlagTol = 0.5;          // structural checks scored 0/1
constexpr int kMaxTries = 20000;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Sampler {
  std::mt19937_64 rng;

  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  double u01() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
  Complex box(double b) { return {uniform(-b, b), uniform(-b, b)}; }

  Complex disk(double r) {
    for (int i = 0; i < kMaxTries; ++i) {
      Complex z = box(r);
      if (std::abs(z) <= r) return z;
    }
    fail(errc::no_convergence, "disk sampler exhausted");
  }

  Complex annulus(double lo, double hi) {
    for (int i = 0; i < kMaxTries; ++i) {
      Complex z = box(hi);
      const double m = std::abs(z);
      if (m >= lo && m <= hi) return z;
    }
    fail(errc::no_convergence, "annulus sampler exhausted");
  }
};

// Collects cases for one suite, applying the plan's tolerance override.
struct CaseSink {
  SuiteReport rep;
  double override_tol;

  CaseSink(std::string name, const SamplePlan& plan)
      : override_tol(plan.tolerance_override) {
    rep.name = std::move(name);
  }

  double tol(double pinned) const { return override_tol >= 0.0 ? override_tol : pinned; }

  void add(const std::string& rule, const std::string& params, const std::string& x,
           double residual, double pinned_tol) {
    rep.cases.push_back(IdentityCase{rule, params, x, residual, tol(pinned_tol)});
  }

  void flag(const std::string& rule, const std::string& what, bool ok) {
    rep.cases.push_back(IdentityCase{rule, what, "", ok ? 0.0 : 1.0, tol(kFlagTol)});
  }
};

// Runs `attempt` on rejection-sampled draws from `draw` until it returns a
// residual without raising; parameter errors reject the draw.
template <class DrawFn, class TryFn>
void sample_case(CaseSink& sink, Sampler& s, const std::string& rule, double pinned_tol,
                 DrawFn draw, TryFn attempt) {
  for (int tries = 0; tries < kMaxTries; ++tries) {
    try {
      auto d = draw();
      double residual = attempt(d.value);
      sink.add(rule, d.params_text, d.point_text, residual, pinned_tol);
      return;
    } catch (const error&) {
      continue;
    }
  }
  fail(errc::no_convergence, "no admissible draw found for rule " + rule);
}

template <class T>
struct Draw {
  T value;
  std::string params_text;
  std::string point_text;
};

std::string gauss_text(const GaussParams& p) {
  return "(alpha=" + format_complex(p.alpha) + ", beta=" + format_complex(p.beta) +
         ", gamma=" + format_complex(p.gamma) + ")";
}

std::string heun_text(const HeunParams& p) {
  return "(a=" + format_complex(p.a) + ", q=" + format_complex(p.q) +
         ", alpha=" + format_complex(p.alpha) + ", beta=" + format_complex(p.beta) +
         ", gamma=" + format_complex(p.gamma) + ", delta=" + format_complex(p.delta) +
         ")";
}

std::string restricted_text(const Restricted3F2Params& p) {
  return "(a1=" + format_complex(p.a1) + ", a2=" + format_complex(p.a2) +
         ", b1=" + format_complex(p.b1) + ", e=" + format_complex(p.e) + ")";
}

std::string f32_text(const ThreeF2Params& p) {
  return "(a1=" + format_complex(p.a1) + ", a2=" + format_complex(p.a2) +
         ", a3=" + format_complex(p.a3) + ", b1=" + format_complex(p.b1) +
         ", b2=" + format_complex(p.b2) + ")";
}

double rel_residual(Complex lhs, Complex rhs) {
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

// --- suite: gauss -----------------------------------------------------------

SuiteReport suite_gauss(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("gauss", plan);
  const std::vector<GaussRule> catalog = kummer_rules(true);

  for (const GaussRule& rule : catalog) {
    for (int i = 0; i < plan.draws_per_rule; ++i) {
      sample_case(
          sink, s, rule.bracket(), kRuleTol,
          [&] {
            GaussParams p{s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                          s.box(plan.modulus_bound)};
            Complex x = s.disk(plan.x_radius_fraction);
            return Draw<std::pair<GaussParams, Complex>>{
                {p, x}, gauss_text(p), format_complex(x)};
          },
          [&](const std::pair<GaussParams, Complex>& d) {
            d.first.validate();
            rule.param_map(d.first).validate();
            const Complex lhs = eval_2f1(d.first, d.second).value;
            const Complex rhs = apply_gauss_rule(rule, d.first, d.second).value;
            return rel_residual(lhs, rhs);
          });
    }
  }

  const std::vector<GaussRule> closed = gauss_closure(catalog);
  sink.flag("closure", "order == 8", closed.size() == 8);

  // The Klein four-group inside: the even-signed quadruple.
  const std::vector<GaussRule> quad = kummer_rules(false);
  sink.flag("klein", "even-signed quadruple has order 4", quad.size() == 4);
  const auto label_of = [&](std::size_t i) { return quad[i].bracket(); };
  std::vector<std::size_t> nontrivial;
  for (std::size_t i = 0; i < quad.size(); ++i)
    if (!quad[i].label.is_identity()) nontrivial.push_back(i);
  sink.flag("klein", "three nontrivial elements", nontrivial.size() == 3);
  for (std::size_t i : nontrivial) {
    const GaussRule square = compose_gauss_rules(quad[i], quad[i]);
    sink.flag("klein", label_of(i) + "^2 == identity", square.label.is_identity());
  }
  // Pairwise products land on the remaining nontrivial element.
  if (nontrivial.size() == 3) {
    for (std::size_t u = 0; u < 3; ++u)
      for (std::size_t v = 0; v < 3; ++v) {
        if (u == v) continue;
        const std::size_t w = 3 - u - v;
        const GaussRule prod = compose_gauss_rules(quad[nontrivial[u]], quad[nontrivial[v]]);
        sink.flag("klein",
                  label_of(nontrivial[u]) + " * " + label_of(nontrivial[v]) + " == " +
                      label_of(nontrivial[w]),
                  prod.label == quad[nontrivial[w]].label);
      }
  }
  return sink.rep;
}

// --- suite: heun-group ------------------------------------------------------

SuiteReport suite_heun_group(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("heun-group", plan);
  const std::vector<HlRule> group = generate_hl_group();

  sink.flag("closure", "order == 24", group.size() == 24);
  bool all_even = true;
  for (const HlRule& r : group) all_even = all_even && r.label.even_signed();
  sink.flag("closure", "all labels even-signed", all_even);

  const auto draw_params = [&] {
    HeunParams p;
    p.a = s.annulus(1.2, 3.0);
    p.q = s.box(plan.modulus_bound);
    p.alpha = s.box(plan.modulus_bound);
    p.beta = s.box(plan.modulus_bound);
    p.gamma = s.box(plan.modulus_bound);
    p.delta = s.box(plan.modulus_bound);
    return p;
  };

  for (const HlRule& rule : group) {
    for (int i = 0; i < plan.draws_per_rule; ++i) {
      sample_case(
          sink, s, rule.bracket(), kRuleTol,
          [&] {
            HeunParams p = draw_params();
            Complex x = s.disk(plan.x_radius_fraction * std::min(1.0, std::abs(p.a)));
            return Draw<std::pair<HeunParams, Complex>>{
                {p, x}, heun_text(p), format_complex(x)};
          },
          [&](const std::pair<HeunParams, Complex>& d) {
            d.first.validate();
            rule.param_map(d.first).validate();
            const Complex lhs = eval_hl(d.first, d.second).value;
            const Complex rhs = apply_hl_rule(rule, d.first, d.second).value;
            return rel_residual(lhs, rhs);
          });
    }
  }

  // Naturality of the normalized accessory parameter under the six
  // fractional-linear generators.
  for (const HlRule& rule : mobius_hl_rules()) {
    for (int i = 0; i < 50; ++i) {
      sample_case(
          sink, s, "qbar-naturality " + rule.bracket(), kNaturalityTol,
          [&] {
            HeunParams p = draw_params();
            return Draw<HeunParams>{p, heun_text(p), ""};
          },
          [&](const HeunParams& p) {
            p.validate();
            const HeunParams tp = rule.param_map(p);
            tp.validate();
            const Complex qb = qbar_of(p);
            const Complex expected = rule.qbar_shadow(p, qb);
            const Complex actual = qbar_of(tp);
            return std::abs(actual - expected);
          });
    }
  }
  return sink.rep;
}

// --- suite: quadratic -------------------------------------------------------

Complex draw_t(Sampler& s, double bound) {
  for (int i = 0; i < kMaxTries; ++i) {
    Complex t = s.box(bound);
    if (std::abs(t) < 0.3) continue;
    QuadraticLiftData d;
    try {
      d = lift_from_t(t);
    } catch (const error&) {
      continue;
    }
    if (std::abs(2.0 - d.a) < 0.1) continue;
    if (std::abs(d.a) < 0.15 || std::abs(d.a - 1.0) < 0.1) continue;
    if (std::abs(d.a_prime) < 1e-3 || std::abs(d.a_prime - 1.0) < 0.1) continue;
    return t;
  }
  fail(errc::no_convergence, "no admissible t draw");
}

SuiteReport suite_quadratic(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("quadratic", plan);

  struct QuadDraw {
    QuadraticLiftData d;
    Complex alpha, gamma, q, x;
  };

  for (int i = 0; i < plan.draws_per_rule; ++i) {
    sample_case(
        sink, s, "quadratic-lift", kRuleTol,
        [&] {
          QuadDraw qd;
          qd.d = lift_from_t(draw_t(s, plan.modulus_bound));
          qd.alpha = s.box(plan.modulus_bound);
          qd.gamma = s.box(plan.modulus_bound);
          qd.q = s.box(plan.modulus_bound);
          // Joint domain: source argument small enough that its image under
          // R stays well inside the target disk.
          const double rx = 0.1 * std::min(1.0, std::abs(qd.d.a));
          for (int k = 0; k < 64; ++k) {
            qd.x = s.disk(rx);
            const Complex image = quad_map_r(qd.d, qd.x);
            if (std::abs(image) <= 0.5 * std::min(1.0, std::abs(qd.d.a_prime))) break;
            if (k == 63) fail(errc::domain_error, "no joint-domain point");
          }
          return Draw<QuadDraw>{
              qd,
              "(t-image a=" + format_complex(qd.d.a) + ", a'=" +
                  format_complex(qd.d.a_prime) + ", alpha=" + format_complex(qd.alpha) +
                  ", gamma=" + format_complex(qd.gamma) + ", q=" + format_complex(qd.q) +
                  ")",
              format_complex(qd.x)};
        },
        [&](const QuadDraw& qd) {
          return quadratic_rule_residual(qd.d, qd.alpha, qd.gamma, qd.q, qd.x);
        });
  }

  for (int i = 0; i < 50; ++i) {
    const Complex t = draw_t(s, plan.modulus_bound);
    const QuadraticLiftData d = lift_from_t(t);
    const std::string params = "(t=" + format_complex(t) + ")";
    sink.add("constraint-curve", params, "",
             std::abs(quadratic_constraint_residual(d.a, d.a_prime)), kExactTol);
    const Complex a_closed = (1.0 + d.a_prime) / (2.0 * (2.0 - d.a));
    sink.add("multiplier-closed-form", params, "", std::abs(d.scale - a_closed),
             kExactTol);
  }
  return sink.rep;
}

// --- suites: biquadratic, h-dup ---------------------------------------------

struct BiquadDraw {
  Complex a, q, gamma, x;
};

BiquadDraw draw_biquad(Sampler& s, const SamplePlan& plan, bool need_gamma) {
  BiquadDraw b;
  b.a = s.annulus(1.2, 3.0);
  b.q = s.box(plan.modulus_bound);
  b.gamma = need_gamma ? s.box(plan.modulus_bound) : Complex(0.5);
  const double rx = 0.1 * std::min(1.0, std::abs(b.a));
  for (int k = 0;; ++k) {
    if (k == 64) fail(errc::domain_error, "no joint-domain point");
    b.x = s.disk(rx);
    if (std::abs(b.a - b.x * b.x) < 0.2) continue;
    if ((1.0 - b.x * b.x / b.a).real() <= 0.0) continue;
    const Complex image = biquad_map_s(b.a, b.x);
    if (std::abs(image) <= 0.5 * std::min(1.0, std::abs(b.a))) break;
  }
  return b;
}

SuiteReport suite_biquadratic(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("biquadratic", plan);

  for (int i = 0; i < plan.draws_per_rule; ++i) {
    sample_case(
        sink, s, "biquadratic-lift", kRuleTol,
        [&] {
          BiquadDraw b = draw_biquad(s, plan, true);
          return Draw<BiquadDraw>{b,
                                  "(a=" + format_complex(b.a) + ", q=" +
                                      format_complex(b.q) + ", gamma=" +
                                      format_complex(b.gamma) + ")",
                                  format_complex(b.x)};
        },
        [&](const BiquadDraw& b) {
          return biquadratic_rule_residual(b.a, b.q, b.gamma, b.x);
        });
  }

  // The three algebraic forms of the quartic map.
  for (int i = 0; i < 50; ++i) {
    sample_case(
        sink, s, "quartic-map-forms", kExactTol,
        [&] {
          Complex a = s.annulus(1.2, 3.0);
          Complex x = s.disk(0.5);
          return Draw<std::pair<Complex, Complex>>{
              {a, x}, "(a=" + format_complex(a) + ")", format_complex(x)};
        },
        [&](const std::pair<Complex, Complex>& d) {
          const Complex a = d.first, x = d.second;
          const Complex den = a - x * x;
          if (std::abs(den) < 0.2) fail(errc::domain_error, "near a = x^2");
          const Complex s1 = 4.0 * a * x * (1.0 - x) * (a - x) / (den * den);
          const Complex n2 = a - 2.0 * a * x + x * x;
          const Complex s2 = 1.0 - n2 * n2 / (den * den);
          const Complex n3 = a - 2.0 * x + x * x;
          const Complex s3 = a - a * n3 * n3 / (den * den);
          return std::max(std::abs(s1 - s2), std::abs(s1 - s3));
        });
  }
  return sink.rep;
}

SuiteReport suite_hdup(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("h-dup", plan);
  for (int i = 0; i < plan.draws_per_rule; ++i) {
    sample_case(
        sink, s, "argument-duplication", kRuleTol,
        [&] {
          BiquadDraw b = draw_biquad(s, plan, false);
          return Draw<BiquadDraw>{
              b, "(a=" + format_complex(b.a) + ", q=" + format_complex(b.q) + ")",
              format_complex(b.x)};
        },
        [&](const BiquadDraw& b) { return h_duplication_residual(b.a, b.q, b.x); });
  }
  return sink.rep;
}

// --- suites: reduction, factorization ----------------------------------------

ApparentCurvePoint draw_curve_point(Sampler& s, const SamplePlan& plan) {
  for (int i = 0; i < kMaxTries; ++i) {
    const Complex alpha = s.box(plan.modulus_bound);
    const Complex beta = s.box(plan.modulus_bound);
    const Complex gamma = s.box(plan.modulus_bound);
    const Complex e = s.box(plan.modulus_bound);
    ApparentCurvePoint p;
    try {
      p = curve_point(alpha, beta, gamma, e);
    } catch (const error&) {
      continue;
    }
    const double am = std::abs(p.heun.a);
    if (am < 1.05 || am > 8.0) continue;
    if (std::abs(p.heun.a - 1.0) < 0.15) continue;
    if (std::abs(p.heun.q) > 20.0) continue;
    return p;
  }
  fail(errc::no_convergence, "no admissible curve point");
}

SuiteReport suite_reduction(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("reduction", plan);

  for (int i = 0; i < 50; ++i) {
    const ApparentCurvePoint p = draw_curve_point(s, plan);
    const std::string params =
        "(alpha=" + format_complex(p.alpha) + ", beta=" + format_complex(p.beta) +
        ", gamma=" + format_complex(p.gamma) + ", e=" + format_complex(p.e) + ")";

    sink.add("curve-membership", params, "", std::abs(curve_residual(p.heun)),
             kExactTol);
    sink.add("curve-membership-relabeled", params, "",
             std::abs(relabeled_curve_residual(p.heun)), kExactTol);

    const double rx = 0.3 * std::min(1.0, std::abs(p.heun.a));
    for (int j = 0; j < 10; ++j) {
      sample_case(
          sink, s, "hl-equals-3f2", kReductionTol,
          [&] {
            Complex x = s.disk(rx);
            return Draw<Complex>{x, params, format_complex(x)};
          },
          [&](Complex x) {
            const Complex lhs = eval_g_heun(p, x).value;
            const Complex rhs = eval_g(p, x).value;
            return rel_residual(lhs, rhs);
          });
    }

    sample_case(
        sink, s, "two-2f1-representations", kReductionTol,
        [&] {
          Complex x = s.disk(rx);
          return Draw<Complex>{x, params, format_complex(x)};
        },
        [&](Complex x) {
          const Complex g = eval_g(p, x).value;
          const GTwoRepresentations reps = g_two_representations(p, x);
          return std::max(rel_residual(g, reps.r1), rel_residual(g, reps.r2));
        });

    sample_case(
        sink, s, "contiguity", kReductionTol,
        [&] {
          Complex x = s.disk(rx);
          return Draw<Complex>{x, params, format_complex(x)};
        },
        [&](Complex x) { return contiguity_residual(p.f32, x); });
  }
  return sink.rep;
}

SuiteReport suite_factorization(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("factorization", plan);
  const std::vector<int> n_samples = {0, 1, 2, 3, 4, 5, 6};

  for (int i = 0; i < plan.draws_per_rule; ++i) {
    const ApparentCurvePoint p = draw_curve_point(s, plan);
    const std::string params =
        "(alpha=" + format_complex(p.alpha) + ", beta=" + format_complex(p.beta) +
        ", gamma=" + format_complex(p.gamma) + ", e=" + format_complex(p.e) + ")";

    sink.add("difference-factorization", params, "",
             difference_factorization_residual(p, n_samples), kExactTol);
    sink.add("differential-factorization", params, "",
             differential_factorization_residual(p, 6), kExactTol);
    sink.add("apparent-point-consistency", params, "",
             apparent_singularity_residual(p.heun), kNaturalityTol);

    // Off-curve control: a small (a, q) perturbation must leave a visible
    // residual in both factorizations.
    const Complex a_off = p.heun.a + 1e-3;
    const Complex q_off = p.heun.q + 1e-3;
    const double diff_off =
        difference_factorization_residual_at(p, n_samples, a_off, q_off);
    const double der_off = differential_factorization_residual_at(p, 6, a_off, q_off);
    sink.flag("difference-off-curve-control",
              params + " perturbed residual " + format_real(diff_off) + " >= 1e-6",
              diff_off >= kOffCurveFloor);
    sink.flag("differential-off-curve-control",
              params + " perturbed residual " + format_real(der_off) + " >= 1e-6",
              der_off >= kOffCurveFloor);
  }
  return sink.rep;
}

// --- suites: f32 ------------------------------------------------------------

Restricted3F2Params draw_restricted(Sampler& s, const SamplePlan& plan) {
  Restricted3F2Params p{s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                        s.box(plan.modulus_bound), s.box(plan.modulus_bound)};
  p.validate();
  return p;
}

void f32_rule_cases(CaseSink& sink, Sampler& s, const SamplePlan& plan,
                    const std::vector<F32Rule>& rules) {
  for (const F32Rule& rule : rules) {
    for (int i = 0; i < plan.draws_per_rule; ++i) {
      sample_case(
          sink, s, rule.bracket() + " (" + rule.name + ")", kRuleTol,
          [&] {
            Restricted3F2Params p{s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                                  s.box(plan.modulus_bound), s.box(plan.modulus_bound)};
            Complex x = s.disk(plan.x_radius_fraction);
            return Draw<std::pair<Restricted3F2Params, Complex>>{
                {p, x}, restricted_text(p), format_complex(x)};
          },
          [&](const std::pair<Restricted3F2Params, Complex>& d) {
            d.first.validate();
            rule.param_map(d.first).validate();
            return f32_rule_residual(rule, d.first, d.second);
          });
    }
  }
}

SuiteReport suite_f32_pfaff(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("f32-pfaff", plan);

  bool order4 = false, order8 = false;
  std::vector<F32Rule> closed8;
  try {
    order4 = restricted_closure(false).size() == 4;
    closed8 = restricted_closure(true);
    order8 = closed8.size() == 8;
  } catch (const error&) {
    // flags below record the failure
  }
  sink.flag("closure", "order without swap == 4", order4);
  sink.flag("closure", "order with swap == 8", order8);

  f32_rule_cases(sink, s, plan, closed8);

  // The e-map of the Pfaff-like rule is lower triangular: e = 0 is a formal
  // fixed point.
  for (int i = 0; i < 5; ++i) {
    sample_case(
        sink, s, "pfaff-e-map-lower-triangular", kExactTol,
        [&] {
          Restricted3F2Params p = draw_restricted(s, plan);
          return Draw<Restricted3F2Params>{p, restricted_text(p), ""};
        },
        [&](const Restricted3F2Params& p) {
          const LowerTriangularEMap m = pfaff_e_map(p);
          if (std::abs(m.den_const) < 1e-8)
            fail(errc::singular_map, "degenerate map draw");
          return std::abs(m.apply(Complex(0.0)));
        });
  }
  return sink.rep;
}

SuiteReport suite_f32_euler(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("f32-euler", plan);
  const std::vector<F32Rule> generators = restricted_rules(true);

  // Euler-like generator and the twisted Pfaff rule it induces.
  std::vector<F32Rule> rules;
  for (const F32Rule& r : generators)
    if (r.name == "euler-like" || r.name == "pfaff-like") rules.push_back(r);
  if (rules.size() == 2) {
    F32Rule twisted = compose_f32_rules(rules[1], rules[0]);  // pfaff then euler
    twisted.name = "twisted-pfaff";
    rules.push_back(twisted);
  }
  sink.flag("generators", "euler-like and pfaff-like present", rules.size() == 3);
  f32_rule_cases(sink, s, plan, rules);

  // swap * euler * swap has the same label and maps as euler.
  const F32Rule* swap = nullptr;
  const F32Rule* euler = nullptr;
  for (const F32Rule& r : generators) {
    if (r.name == "swap") swap = &r;
    if (r.name == "euler-like") euler = &r;
  }
  if (swap != nullptr && euler != nullptr) {
    const F32Rule conj =
        compose_f32_rules(compose_f32_rules(*swap, *euler), *swap);
    sink.flag("conjugation", "swap*euler*swap label == euler label",
              conj.label == euler->label);
  }

  for (int i = 0; i < 5; ++i) {
    sample_case(
        sink, s, "euler-e-map-lower-triangular", kExactTol,
        [&] {
          Restricted3F2Params p = draw_restricted(s, plan);
          return Draw<Restricted3F2Params>{p, restricted_text(p), ""};
        },
        [&](const Restricted3F2Params& p) {
          const LowerTriangularEMap m = euler_e_map(p);
          if (std::abs(m.den_const) < 1e-8)
            fail(errc::singular_map, "degenerate map draw");
          return std::abs(m.apply(Complex(0.0)));
        });
  }
  return sink.rep;
}

SuiteReport suite_f32_corollaries(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("f32-corollaries", plan);

  for (int i = 0; i < plan.draws_per_rule; ++i) {
    sample_case(
        sink, s, "three-parameter-pfaff (bailey_slater_check)", kRuleTol,
        [&] {
          const Complex a1 = s.box(plan.modulus_bound);
          const Complex a2 = s.box(plan.modulus_bound);
          const Complex b1 = s.box(plan.modulus_bound);
          Complex x = s.disk(plan.x_radius_fraction);
          return Draw<std::array<Complex, 4>>{
              {a1, a2, b1, x},
              "(a1=" + format_complex(a1) + ", a2=" + format_complex(a2) +
                  ", b1=" + format_complex(b1) + ")",
              format_complex(x)};
        },
        [&](const std::array<Complex, 4>& d) {
          ThreeF2Params lhs{d[0], d[1], -d[1] + 1.0, d[2], -d[1]};
          lhs.validate();
          ThreeF2Params rhs{d[0], d[2] - d[1] - 1.0, (d[2] - d[1] + 1.0) / 2.0, d[2],
                            (d[2] - d[1] - 1.0) / 2.0};
          rhs.validate();
          return bailey_slater_check(d[0], d[1], d[2], d[3]);
        });
  }

  for (int i = 0; i < plan.draws_per_rule; ++i) {
    sample_case(
        sink, s, "drop-to-2f1 (reduce_to_2f1)", kRuleTol,
        [&] {
          const Complex a1 = s.box(plan.modulus_bound);
          const Complex a2 = s.box(plan.modulus_bound);
          const Complex b1 = s.box(plan.modulus_bound);
          Complex x = s.disk(plan.x_radius_fraction);
          return Draw<std::array<Complex, 4>>{
              {a1, a2, b1, x},
              "(a1=" + format_complex(a1) + ", a2=" + format_complex(a2) +
                  ", b1=" + format_complex(b1) + ")",
              format_complex(x)};
        },
        [&](const std::array<Complex, 4>& d) {
          const ReduceTo2F1 r = reduce_to_2f1(d[0], d[1], d[2], d[3]);
          return rel_residual(r.lhs, r.rhs);
        });
  }

  for (int i = 0; i < plan.draws_per_rule; ++i) {
    sample_case(
        sink, s, "very-well-poised-reduction", kRuleTol,
        [&] {
          const Complex alpha = s.box(plan.modulus_bound);
          const Complex beta = s.box(plan.modulus_bound);
          Complex x = s.disk(plan.x_radius_fraction);
          return Draw<std::array<Complex, 3>>{
              {alpha, beta, x},
              "(alpha=" + format_complex(alpha) + ", beta=" + format_complex(beta) + ")",
              format_complex(x)};
        },
        [&](const std::array<Complex, 3>& d) {
          return very_well_poised_residual(d[0], d[1], d[2]);
        });
  }

  for (int i = 0; i < plan.draws_per_rule; ++i) {
    sample_case(
        sink, s, "weighted-involution", kRuleTol,
        [&] {
          const Complex alpha = s.box(plan.modulus_bound);
          const Complex beta = s.box(plan.modulus_bound);
          Complex x = s.disk(plan.x_radius_fraction);
          return Draw<std::array<Complex, 3>>{
              {alpha, beta, x},
              "(alpha=" + format_complex(alpha) + ", beta=" + format_complex(beta) + ")",
              format_complex(x)};
        },
        [&](const std::array<Complex, 3>& d) {
          return bailey_involution_check(d[0], d[1], d[2]);
        });
  }

  for (int i = 0; i < 5; ++i) {
    sample_case(
        sink, s, "stable-family (s,t)", kRuleTol,
        [&] {
          const Complex alpha = s.box(plan.modulus_bound);
          const Complex beta = s.box(plan.modulus_bound);
          const Complex st = s.box(1.0);
          const Complex tt = s.box(1.0);
          Complex x = s.disk(plan.x_radius_fraction);
          return Draw<std::array<Complex, 5>>{
              {alpha, beta, st, tt, x},
              "(alpha=" + format_complex(alpha) + ", beta=" + format_complex(beta) +
                  ", s=" + format_complex(st) + ", t=" + format_complex(tt) + ")",
              format_complex(x)};
        },
        [&](const std::array<Complex, 5>& d) {
          return family_stability_check(d[0], d[1], d[2], d[3], d[4]);
        });
  }

  // Closed form 3F2(1,1,2;2,1;x) = 1/(1-x).
  for (int i = 0; i < 10; ++i) {
    const Complex x = s.disk(plan.x_radius_fraction);
    const Complex lhs =
        eval_3f2(ThreeF2Params{Complex(1.0), Complex(1.0), Complex(2.0), Complex(2.0),
                               Complex(1.0)},
                 x)
            .value;
    sink.add("drop-to-2f1 closed form (1,1,2;2,1)", "(a1=1, a2=1, b1=2)",
             format_complex(x), std::abs(lhs - 1.0 / (1.0 - x)), kExactTol);
  }

  // Specialization chain and structural classifications.
  for (int i = 0; i < 5; ++i) {
    sample_case(
        sink, s, "very-well-poised-e-specialization", kExactTol,
        [&] {
          const Complex alpha = s.box(plan.modulus_bound);
          const Complex beta = s.box(plan.modulus_bound);
          return Draw<std::pair<Complex, Complex>>{
              {alpha, beta},
              "(alpha=" + format_complex(alpha) + ", beta=" + format_complex(beta) + ")",
              ""};
        },
        [&](const std::pair<Complex, Complex>& d) {
          // At b1 = alpha - beta + 1 the generic reduction e equals alpha/2.
          const Complex e = reduction_e(d.first, d.second, d.first - d.second + 1.0);
          return std::abs(e - d.first / 2.0);
        });

    sample_case(
        sink, s, "stable-family s=t=0 specializes to involution", kExactTol,
        [&] {
          const Complex alpha = s.box(plan.modulus_bound);
          const Complex beta = s.box(plan.modulus_bound);
          return Draw<std::pair<Complex, Complex>>{
              {alpha, beta},
              "(alpha=" + format_complex(alpha) + ", beta=" + format_complex(beta) + ")",
              ""};
        },
        [&](const std::pair<Complex, Complex>& d) {
          const Complex alpha = d.first, beta = d.second;
          const StableFamilyMember m =
              stable_family_member(alpha, beta, Complex(0.0), Complex(0.0));
          const double diff =
              std::abs(m.params.a1 - (2.0 * alpha - 1.0)) +
              std::abs(m.params.a2 - (alpha - beta - 0.5)) +
              std::abs(m.params.b1 - (alpha + beta + 0.5)) +
              std::abs(m.params.e - (alpha - 0.5));
          return diff;
        });

    sample_case(
        sink, s, "poisedness-classification", kFlagTol,
        [&] {
          const Complex alpha = s.box(plan.modulus_bound);
          const Complex beta = s.box(plan.modulus_bound);
          const Complex a2 = s.box(plan.modulus_bound);
          const Complex b1 = s.box(plan.modulus_bound);
          return Draw<std::array<Complex, 4>>{
              {alpha, beta, a2, b1},
              "(alpha=" + format_complex(alpha) + ", beta=" + format_complex(beta) +
                  ", a2=" + format_complex(a2) + ", b1=" + format_complex(b1) + ")",
              ""};
        },
        [&](const std::array<Complex, 4>& d) {
          const Complex alpha = d[0], beta = d[1], a2 = d[2], b1 = d[3];
          const ThreeF2Params involution{2.0 * alpha - 1.0, alpha - beta - 0.5,
                                         alpha + 0.5, alpha + beta + 0.5, alpha - 0.5};
          if (classify_poisedness(involution) != Poisedness::very_well)
            return 1.0;
          const ThreeF2Params serpent{alpha, b1 - a2 - 1.0, (b1 - a2 + 1.0) / 2.0, b1,
                                      (b1 - a2 - 1.0) / 2.0};
          if (classify_poisedness(serpent) != Poisedness::nearly_very_well)
            return 1.0;
          return 0.0;
        });

    sample_case(
        sink, s, "dual-symbol-columns-share-two-exponents", kFlagTol,
        [&] {
          const Complex alpha = s.box(plan.modulus_bound);
          const Complex beta = s.box(plan.modulus_bound);
          return Draw<std::pair<Complex, Complex>>{
              {alpha, beta},
              "(alpha=" + format_complex(alpha) + ", beta=" + format_complex(beta) + ")",
              ""};
        },
        [&](const std::pair<Complex, Complex>& d) {
          if (std::abs(d.first - d.second) < 0.05)
            fail(errc::degenerate_error, "too close to the symmetric point");
          const PSymbol lhs = involution_side_symbol(d.first, d.second);
          const PSymbol rhs = involution_side_symbol(d.second, d.first);
          for (const PColumn& col : lhs.columns) {
            const PColumn* other = rhs.find(col.location);
            if (other == nullptr) return 1.0;
            std::vector<bool> used(other->exponents.size(), false);
            int shared = 0;
            for (const Complex& ex : col.exponents) {
              for (std::size_t k = 0; k < other->exponents.size(); ++k) {
                if (!used[k] && std::abs(other->exponents[k] - ex) <= 1e-9) {
                  used[k] = true;
                  ++shared;
                  break;
                }
              }
            }
            if (shared < 2) return 1.0;
          }
          return 0.0;
        });
  }
  return sink.rep;
}

// --- suite: derivative --------------------------------------------------------

SuiteReport suite_derivative(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("derivative", plan);
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::string rule = "derivative-order-" + std::to_string(n);
    for (int i = 0; i < 10; ++i) {
      sample_case(
          sink, s, rule, kRuleTol,
          [&] {
            HeunParams p;
            p.a = s.annulus(1.2, 3.0);
            p.q = s.box(plan.modulus_bound);
            p.alpha = Complex(1.0 - static_cast<double>(n));
            p.beta = s.box(plan.modulus_bound);
            p.gamma = s.box(plan.modulus_bound);
            p.delta = s.box(plan.modulus_bound);
            return Draw<HeunParams>{p, heun_text(p), ""};
          },
          [&](const HeunParams& p) {
            p.validate();
            return derivative_identity_residual(p, n);
          });
    }
  }
  return sink.rep;
}

// --- suite: classifier ---------------------------------------------------------

SuiteReport suite_classifier(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("classifier", plan);

  for (int i = 0; i < 100; ++i) {
    sample_case(
        sink, s, "two-term-round-trip", kRuleTol,
        [&] {
          GaussParams p{s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                        s.box(plan.modulus_bound)};
          const Complex scale = s.annulus(0.5, 2.0);
          const Complex overall = s.annulus(0.5, 2.0);
          return Draw<std::array<Complex, 5>>{
              {p.alpha, p.beta, p.gamma, scale, overall}, gauss_text(p),
              "A=" + format_complex(scale)};
        },
        [&](const std::array<Complex, 5>& d) {
          GaussParams p{d[0], d[1], d[2]};
          p.validate();
          const Complex scale = d[3], overall = d[4];
          QuadraticPoly p1{overall, overall * (p.gamma + 1.0), overall * p.gamma};
          QuadraticPoly p0{-overall * scale, -overall * scale * (p.alpha + p.beta),
                           -overall * scale * p.alpha * p.beta};
          const Classified2Term rec = classify_2term(p1, p0);
          Complex lo = p.alpha, hi = p.beta;
          if (complex_less(hi, lo)) std::swap(lo, hi);
          return std::max({std::abs(rec.scale - scale),
                           std::abs(rec.params.alpha - lo),
                           std::abs(rec.params.beta - hi),
                           std::abs(rec.params.gamma - p.gamma)});
        });
  }

  for (int i = 0; i < 100; ++i) {
    sample_case(
        sink, s, "three-term-round-trip", kRuleTol,
        [&] {
          HeunParams p;
          p.a = s.annulus(1.2, 3.0);
          p.q = s.box(plan.modulus_bound);
          p.alpha = s.box(plan.modulus_bound);
          p.beta = s.box(plan.modulus_bound);
          p.gamma = s.box(plan.modulus_bound);
          p.delta = s.box(plan.modulus_bound);
          const Complex scale = s.annulus(0.5, 2.0);
          const Complex overall = s.annulus(0.5, 2.0);
          return Draw<std::pair<HeunParams, std::pair<Complex, Complex>>>{
              {p, {scale, overall}}, heun_text(p), "A=" + format_complex(scale)};
        },
        [&](const std::pair<HeunParams, std::pair<Complex, Complex>>& d) {
          const HeunParams& p = d.first;
          p.validate();
          const Complex scale = d.second.first, overall = d.second.second;
          const Complex eps = p.epsilon();
          QuadraticPoly p2{overall * p.a, overall * p.a * (p.gamma + 3.0),
                           overall * p.a * 2.0 * (p.gamma + 1.0)};
          QuadraticPoly p1{
              -overall * scale * (p.a + 1.0),
              -overall * scale *
                  (p.a * (p.gamma + p.delta + 1.0) + p.gamma + eps + 1.0),
              -overall * scale * (p.a * (p.gamma + p.delta) + p.gamma + eps + p.q)};
          QuadraticPoly p0{overall * scale * scale,
                           overall * scale * scale * (p.alpha + p.beta),
                           overall * scale * scale * p.alpha * p.beta};
          const Classified3Term rec = classify_3term(p2, p1, p0);
          Complex lo = p.alpha, hi = p.beta;
          if (complex_less(hi, lo)) std::swap(lo, hi);
          return std::max({std::abs(rec.scale - scale), std::abs(rec.params.a - p.a),
                           std::abs(rec.params.q - p.q),
                           std::abs(rec.params.alpha - lo),
                           std::abs(rec.params.beta - hi),
                           std::abs(rec.params.gamma - p.gamma),
                           std::abs(rec.params.delta - p.delta)});
        });
  }

  // The confluent a = 1 case must be rejected, not classified.
  {
    bool rejected = false;
    const Complex one(1.0);
    QuadraticPoly p2{one, Complex(4.1), Complex(4.2)};  // a = 1, gamma = 1.1
    QuadraticPoly p1{Complex(-2.0), Complex(-5.0), Complex(-4.0)};
    QuadraticPoly p0{one, Complex(1.5), Complex(0.56)};
    try {
      (void)classify_3term(p2, p1, p0);
    } catch (const error& err) {
      rejected = err.kind() == errc::degenerate_error;
    }
    sink.flag("three-term-confluent", "a == 1 raises degenerate_error", rejected);
  }
  return sink.rep;
}

// --- suite: psymbol ------------------------------------------------------------

bool is_ordinary_pair(const std::vector<Complex>& exponents) {
  if (exponents.size() != 2) return false;
  const double d0 = std::abs(exponents[0]) + std::abs(exponents[1] - 1.0);
  const double d1 = std::abs(exponents[1]) + std::abs(exponents[0] - 1.0);
  return std::min(d0, d1) <= 1e-9;
}

PSymbol drop_ordinary_columns(const PSymbol& p) {
  PSymbol out;
  for (const PColumn& col : p.columns)
    if (col.location.at_infinity || !is_ordinary_pair(col.exponents))
      out.columns.push_back(col);
  return out;
}

SuiteReport suite_psymbol(const SamplePlan& plan, Sampler& s) {
  CaseSink sink("psymbol", plan);

  for (int i = 0; i < 5; ++i) {
    sample_case(
        sink, s, "fuchs-sum-gauss", kExactTol,
        [&] {
          GaussParams p{s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                        s.box(plan.modulus_bound)};
          return Draw<GaussParams>{p, gauss_text(p), ""};
        },
        [&](const GaussParams& p) { return std::abs(fuchs_defect(gauss_symbol(p))); });

    sample_case(
        sink, s, "fuchs-sum-heun", kExactTol,
        [&] {
          HeunParams p{s.annulus(1.2, 3.0),     s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound), s.box(plan.modulus_bound)};
          return Draw<HeunParams>{p, heun_text(p), ""};
        },
        [&](const HeunParams& p) {
          p.validate();
          return std::abs(fuchs_defect(heun_symbol(p)));
        });

    sample_case(
        sink, s, "fuchs-sum-third-order", kExactTol,
        [&] {
          ThreeF2Params p{s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                          s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                          s.box(plan.modulus_bound)};
          return Draw<ThreeF2Params>{p, f32_text(p), ""};
        },
        [&](const ThreeF2Params& p) {
          // Third-order symbols satisfy sum == 3 for three columns.
          return std::abs(fuchs_sum(clausen_symbol(p)) - 3.0);
        });

    sample_case(
        sink, s, "fuchs-sum-mobius-invariance", kExactTol,
        [&] {
          HeunParams p{s.annulus(1.2, 3.0),     s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound), s.box(plan.modulus_bound)};
          MobiusMap m{s.box(2.0), s.box(2.0), s.box(2.0), s.box(2.0)};
          return Draw<std::pair<HeunParams, MobiusMap>>{{p, m}, heun_text(p), ""};
        },
        [&](const std::pair<HeunParams, MobiusMap>& d) {
          d.first.validate();
          if (std::abs(d.second.det()) < 0.1)
            fail(errc::degenerate_error, "near-singular map");
          const PSymbol sym = heun_symbol(d.first);
          return std::abs(fuchs_sum(mobius_lift(sym, d.second)) - fuchs_sum(sym));
        });

    sample_case(
        sink, s, "f-homotopy-round-trip", kExactTol,
        [&] {
          HeunParams p{s.annulus(1.2, 3.0),     s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound), s.box(plan.modulus_bound)};
          const Complex zeta = s.box(plan.modulus_bound);
          return Draw<std::pair<HeunParams, Complex>>{
              {p, zeta}, heun_text(p), "zeta=" + format_complex(zeta)};
        },
        [&](const std::pair<HeunParams, Complex>& d) {
          d.first.validate();
          const PSymbol sym = heun_symbol(d.first);
          const PSymbol back =
              f_homotopy(f_homotopy(sym, Complex(1.0), d.second), Complex(1.0),
                         -d.second);
          if (!equal_psymbol(sym, back, 1e-11))
            fail(errc::shape_error, "round trip disagreed");
          const PSymbol shifted = f_homotopy(sym, Complex(1.0), d.second);
          return std::abs(fuchs_sum(shifted) - fuchs_sum(sym));
        });

    sample_case(
        sink, s, "normalize-preserves-fuchs-sum", kExactTol,
        [&] {
          HeunParams p{s.annulus(1.2, 3.0),     s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound), s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound), s.box(plan.modulus_bound)};
          return Draw<HeunParams>{p, heun_text(p), ""};
        },
        [&](const HeunParams& p) {
          p.validate();
          const PSymbol sym = heun_symbol(p);
          const NormalizeResult norm = normalize(sym);
          return std::abs(fuchs_sum(norm.symbol) - fuchs_sum(sym));
        });
  }

  // Exponent table of the degree-2 lifting: pulling the target symbol back
  // along R matches the source symbol with the (1-x)^alpha weight folded in.
  for (int i = 0; i < 5; ++i) {
    sample_case(
        sink, s, "rational-lift-degree-2", kFlagTol,
        [&] {
          const Complex t = draw_t(s, plan.modulus_bound);
          const Complex alpha = s.box(plan.modulus_bound);
          const Complex gamma = s.box(plan.modulus_bound);
          return Draw<std::array<Complex, 3>>{
              {t, alpha, gamma},
              "(t=" + format_complex(t) + ", alpha=" + format_complex(alpha) +
                  ", gamma=" + format_complex(gamma) + ")",
              ""};
        },
        [&](const std::array<Complex, 3>& d) {
          const QuadraticLiftData lift = lift_from_t(d[0]);
          const Complex alpha = d[1], gamma = d[2];
          HeunParams source{lift.a,
                            Complex(0.0),
                            2.0 * alpha,
                            gamma,
                            gamma,
                            2.0 * alpha - gamma + 1.0};
          HeunParams target{lift.a_prime, Complex(0.0), alpha, gamma - alpha, gamma,
                            Complex(0.5)};
          source.validate();
          target.validate();
          const PSymbol lifted =
              rational_lift(heun_symbol(target), quad_map_descriptor(lift));
          const PSymbol expected = f_homotopy(heun_symbol(source), Complex(1.0), -alpha);
          return equal_psymbol(lifted, expected, 1e-9) ? 0.0 : 1.0;
        });
  }

  // Quartic lifting schema: after the weight homotopies at the two square
  // roots, exactly the four marked columns stay singular and match the
  // source symbol.
  for (int i = 0; i < 5; ++i) {
    sample_case(
        sink, s, "rational-lift-degree-4", kFlagTol,
        [&] {
          const Complex a = s.annulus(1.2, 3.0);
          const Complex gamma = s.box(plan.modulus_bound);
          return Draw<std::pair<Complex, Complex>>{
              {a, gamma},
              "(a=" + format_complex(a) + ", gamma=" + format_complex(gamma) + ")",
              ""};
        },
        [&](const std::pair<Complex, Complex>& d) {
          const Complex a = d.first, gamma = d.second;
          HeunParams source{a, Complex(0.0), 2.0 * gamma - 1.0, gamma, gamma, gamma};
          HeunParams target{a,
                            Complex(0.0),
                            gamma / 2.0 - 0.25,
                            gamma / 2.0 + 0.25,
                            gamma,
                            Complex(0.5)};
          source.validate();
          target.validate();
          if (std::abs(gamma - 0.5) < 0.05)
            fail(errc::degenerate_error, "weight exponent too close to zero");
          const Complex root = std::sqrt(a);
          PSymbol lifted = rational_lift(heun_symbol(target), biquad_map_descriptor(a));
          lifted = f_homotopy(lifted, root, gamma - 0.5);
          lifted = f_homotopy(lifted, -root, gamma - 0.5);
          const PSymbol pruned = drop_ordinary_columns(lifted);
          if (pruned.columns.size() != 4) return 1.0;
          return equal_psymbol(pruned, heun_symbol(source), 1e-9) ? 0.0 : 1.0;
        });
  }

  // Shape of the N-th derivative symbol.
  for (std::size_t n = 0; n <= 3; ++n) {
    sample_case(
        sink, s, "derivative-symbol-order-" + std::to_string(n), kFlagTol,
        [&] {
          HeunParams p{s.annulus(1.2, 3.0),
                       s.box(plan.modulus_bound),
                       Complex(1.0 - static_cast<double>(n)),
                       s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound),
                       s.box(plan.modulus_bound)};
          return Draw<HeunParams>{p, heun_text(p), ""};
        },
        [&](const HeunParams& p) {
          p.validate();
          const PSymbol in = heun_symbol(p);
          const PSymbol out = derivative_symbol(in, n);
          const double nn = static_cast<double>(n);
          PSymbol expected;
          expected.columns.push_back(
              {SpherePoint::finite(Complex(0.0)), {Complex(0.0), 1.0 - p.gamma - nn}});
          expected.columns.push_back(
              {SpherePoint::finite(Complex(1.0)), {Complex(0.0), 1.0 - p.delta - nn}});
          expected.columns.push_back(
              {SpherePoint::finite(p.a), {Complex(0.0), 1.0 - p.epsilon() - nn}});
          expected.columns.push_back(
              {SpherePoint::infinity(), {Complex(1.0 + nn), p.beta + nn}});
          if (std::abs(fuchs_defect(out)) > 1e-11) return 1.0;
          return equal_psymbol(out, expected, 1e-9) ? 0.0 : 1.0;
        });
  }
  return sink.rep;
}

// --- dispatch -----------------------------------------------------------------

using SuiteFn = SuiteReport (*)(const SamplePlan&, Sampler&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

const SuiteEntry kSuites[] = {
    {"gauss", suite_gauss},
    {"heun-group", suite_heun_group},
    {"quadratic", suite_quadratic},
    {"biquadratic", suite_biquadratic},
    {"h-dup", suite_hdup},
    {"reduction", suite_reduction},
    {"factorization", suite_factorization},
    {"f32-pfaff", suite_f32_pfaff},
    {"f32-euler", suite_f32_euler},
    {"f32-corollaries", suite_f32_corollaries},
    {"derivative", suite_derivative},
    {"classifier", suite_classifier},
    {"psymbol", suite_psymbol},
};

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

SuiteReport run_one(const SuiteEntry& entry, const SamplePlan& plan) {
  // Per-suite seeding keeps each suite deterministic whether it runs alone
  // or as part of the full set.
  Sampler s(plan.seed ^ fnv1a(entry.name));
  return entry.fn(plan, s);
}

}  // namespace

const std::vector<std::string>& verifier_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteEntry& e : kSuites) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

bool is_verifier_suite(const std::string& name) {
  for (const SuiteEntry& e : kSuites)
    if (name == e.name) return true;
  return false;
}

IdentityReport run_suite(const std::string& name, const SamplePlan& plan) {
  plan.validate();
  for (const SuiteEntry& e : kSuites) {
    if (name != e.name) continue;
    IdentityReport rep;
    rep.tool_version = version_string;
    rep.plan = plan;
    rep.timestamp = now_utc();
    const auto start = std::chrono::steady_clock::now();
    rep.suites.push_back(run_one(e, plan));
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }
  fail(errc::usage_error, "unknown suite: " + name);
}

IdentityReport run_all(const SamplePlan& plan) {
  plan.validate();
  IdentityReport rep;
  rep.tool_version = version_string;
  rep.plan = plan;
  rep.timestamp = now_utc();
  const auto start = std::chrono::steady_clock::now();
  for (const SuiteEntry& e : kSuites) rep.suites.push_back(run_one(e, plan));
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}
