#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "heunkit/error.hpp"
#include "heunkit/gauss_transforms.hpp"
#include "heunkit/heun_transforms.hpp"
#include "heunkit/hyper3f2.hpp"
#include "heunkit/psymbol.hpp"
#include "heunkit/report.hpp"
#include "heunkit/verifier.hpp"
#include "heunkit/version.hpp"

namespace {

using namespace heunkit;

std::string join_word(const std::vector<std::string>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += "*";
    out += word[i];
  }
  return out;
}

std::uint64_t seed_from_env() {
  const char* env = std::getenv("HEUNKIT_SEED");
  if (env == nullptr || *env == '\0') return 42;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0')
    fail(errc::usage_error, std::string("HEUNKIT_SEED is not an integer: ") + env);
  return static_cast<std::uint64_t>(v);
}

int list_rules(const std::string& family) {
  if (family == "gauss") {
    for (const GaussRule& r : kummer_rules(true))
      std::printf("%-16s %-24s %s\n", r.bracket().c_str(), r.name.c_str(),
                  r.formula.c_str());
    return 0;
  }
  if (family == "heun") {
    for (const HlRule& r : generate_hl_group()) {
      const std::string desc = r.word.size() == 1 ? r.formula : join_word(r.word);
      std::printf("%-22s %s\n", r.bracket().c_str(), desc.c_str());
    }
    return 0;
  }
  if (family == "3f2") {
    for (const F32Rule& r : restricted_closure(true)) {
      const std::string desc = r.word.size() == 1 ? r.formula : join_word(r.word);
      std::printf("%-14s %s\n", r.bracket().c_str(), desc.c_str());
    }
    return 0;
  }
  fail(errc::usage_error, "--list-rules takes gauss, heun, or 3f2");
}

int explain_rule(const std::string& label) {
  for (const GaussRule& r : kummer_rules(true)) {
    if (r.bracket() != label) continue;
    std::printf("family:  2F1 (Kummer group)\n");
    std::printf("label:   %s\n", r.bracket().c_str());
    std::printf("name:    %s\n", r.name.c_str());
    std::printf("word:    %s\n", join_word(r.word).c_str());
    std::printf("formula: %s\n", r.formula.c_str());
    const GaussParams probe{{0.35, 0.15}, {-0.42, 0.27}, {1.21, -0.33}};
    const GaussParams image = r.param_map(probe);
    std::printf("\nprobe %s\n  maps to %s\n",
                ("(alpha=" + format_complex(probe.alpha) + ", beta=" +
                 format_complex(probe.beta) + ", gamma=" + format_complex(probe.gamma) +
                 ")")
                    .c_str(),
                ("(alpha=" + format_complex(image.alpha) + ", beta=" +
                 format_complex(image.beta) + ", gamma=" + format_complex(image.gamma) +
                 ")")
                    .c_str());
    std::printf("\nsource P-symbol:\n%s\n", render(gauss_symbol(probe)).c_str());
    std::printf("target P-symbol:\n%s\n", render(gauss_symbol(image)).c_str());
    return 0;
  }
  for (const HlRule& r : generate_hl_group()) {
    if (r.bracket() != label) continue;
    std::printf("family:  Hl (order-24 group)\n");
    std::printf("label:   %s\n", r.bracket().c_str());
    std::printf("name:    %s\n", r.name.c_str());
    std::printf("word:    %s\n", join_word(r.word).c_str());
    if (!r.formula.empty()) std::printf("formula: %s\n", r.formula.c_str());
    const HeunParams probe{{2.2, 0.7}, {0.41, -0.23}, {0.31, 0.21},
                           {-0.56, 0.13}, {1.23, -0.41}, {0.67, 0.29}};
    const HeunParams image = r.param_map(probe);
    std::printf(
        "\nprobe (a=%s, q=%s, alpha=%s, beta=%s, gamma=%s, delta=%s)\n",
        format_complex(probe.a).c_str(), format_complex(probe.q).c_str(),
        format_complex(probe.alpha).c_str(), format_complex(probe.beta).c_str(),
        format_complex(probe.gamma).c_str(), format_complex(probe.delta).c_str());
    std::printf(
        "  maps to (a=%s, q=%s, alpha=%s, beta=%s, gamma=%s, delta=%s)\n",
        format_complex(image.a).c_str(), format_complex(image.q).c_str(),
        format_complex(image.alpha).c_str(), format_complex(image.beta).c_str(),
        format_complex(image.gamma).c_str(), format_complex(image.delta).c_str());
    std::printf("\nsource P-symbol:\n%s\n", render(heun_symbol(probe)).c_str());
    std::printf("target P-symbol:\n%s\n", render(heun_symbol(image)).c_str());
    return 0;
  }
  for (const F32Rule& r : restricted_closure(true)) {
    if (r.bracket() != label) continue;
    std::printf("family:  3F2 restricted family\n");
    std::printf("label:   %s\n", r.bracket().c_str());
    std::printf("name:    %s\n", r.name.c_str());
    std::printf("word:    %s\n", join_word(r.word).c_str());
    if (!r.formula.empty()) std::printf("formula: %s\n", r.formula.c_str());
    const Restricted3F2Params probe{{0.62, 0.21}, {-0.48, 0.37}, {1.37, -0.29},
                                    {0.83, 0.44}};
    const Restricted3F2Params image = r.param_map(probe);
    std::printf("\nprobe (a1=%s, a2=%s, b1=%s, e=%s)\n",
                format_complex(probe.a1).c_str(), format_complex(probe.a2).c_str(),
                format_complex(probe.b1).c_str(), format_complex(probe.e).c_str());
    std::printf("  maps to (a1=%s, a2=%s, b1=%s, e=%s)\n",
                format_complex(image.a1).c_str(), format_complex(image.a2).c_str(),
                format_complex(image.b1).c_str(), format_complex(image.e).c_str());
    std::printf("\nsource P-symbol (third order):\n%s\n",
                render(clausen_symbol(probe.full())).c_str());
    std::printf("target P-symbol (third order):\n%s\n",
                render(clausen_symbol(image.full())).c_str());
    return 0;
  }
  fail(errc::usage_error, "no rule with label " + label +
                              " (labels are bracket strings, e.g. \"[1+inf+]\")");
}

int run_verification(const std::string& suite, const SamplePlan& plan,
                     const std::string& report_path) {
  const IdentityReport report =
      suite.empty() ? run_all(plan) : run_suite(suite, plan);
  if (!report_path.empty()) write_report_file(report, report_path);

  for (const SuiteReport& s : report.suites) {
    std::printf("%-18s %4zu cases  %4zu passed  %4zu failed\n", s.name.c_str(),
                s.cases.size(), s.passed(), s.failed());
    int shown = 0;
    for (const IdentityCase& c : s.cases) {
      if (c.pass()) continue;
      if (++shown > 20) {
        std::printf("    ... further failures omitted\n");
        break;
      }
      std::printf("    FAIL %s %s %s residual=%s tol=%s\n", c.rule.c_str(),
                  c.parameter_draw.c_str(), c.point_draw.c_str(),
                  format_real(c.residual).c_str(), format_real(c.tolerance).c_str());
    }
  }
  std::printf("total %zu cases, %zu passed, %zu failed (%.2fs, seed %llu)\n",
              report.total_cases(), report.total_passed(), report.total_failed(),
              report.wall_seconds,
              static_cast<unsigned long long>(report.plan.seed));
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local Heun and hypergeometric transformation toolkit"};
  app.set_version_flag("--version", std::string("heunkit ") + version_string);
  app.set_config("--config");

  CLI::App* verify = app.add_subcommand(
      "verify", "Sample admissible draws and verify every catalogued identity");
  std::string suite;
  std::string report_path;
  std::string list_family;
  std::string explain_label;
  std::uint64_t seed = 0;
  bool seed_given = false;
  SamplePlan plan;

  verify->add_option("--suite", suite, "Run a single suite")
      ->check(CLI::IsMember(verifier_suite_names()));
  verify->add_option("--seed", seed, "Sampling seed (default: HEUNKIT_SEED or 42)")
      ->each([&](const std::string&) { seed_given = true; });
  verify->add_option("--draws", plan.draws_per_rule, "Draws per rule (default 20)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", plan.tolerance_override,
                     "Override every pinned tolerance");
  verify->add_option("--report", report_path, "Write the JSON report to this path");
  verify->add_option("--list-rules", list_family,
                     "Print a rule catalog (gauss, heun, or 3f2) and exit")
      ->check(CLI::IsMember(std::vector<std::string>{"gauss", "heun", "3f2"}));
  verify->add_option("--explain", explain_label,
                     "Print one rule's maps and P-symbols and exit");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!list_family.empty()) return list_rules(list_family);
    if (!explain_label.empty()) return explain_rule(explain_label);
    plan.seed = seed_given ? seed : seed_from_env();
    return run_verification(suite, plan, report_path);
  } catch (const heunkit::error& e) {
    std::fprintf(stderr, "heunkit: %s\n", e.what());
    return e.kind() == heunkit::errc::usage_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "heunkit: %s\n", e.what());
    return 1;
  }
}
