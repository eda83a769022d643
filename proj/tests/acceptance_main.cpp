// Acceptance gate: one line per criterion, nonzero exit when any fails.
//
// Every numeric criterion is driven by the deterministic verifier suites at
// seed 42 with their pinned tolerances; structural facts (catalog sizes,
// group laws) are checked directly.  The final criterion spawns the real CLI
// twice and compares the reports byte-for-byte outside the meta line.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "heunkit/gauss_transforms.hpp"
#include "heunkit/heun_transforms.hpp"
#include "heunkit/hyper3f2.hpp"
#include "heunkit/report.hpp"
#include "heunkit/verifier.hpp"

namespace {

int g_failures = 0;

void report_line(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %2d  %-26s  %s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <class F>
void criterion(int idx, const char* name, F&& body) {
  bool ok = false;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  report_line(idx, name, ok, detail);
}

heunkit::IdentityReport run(const std::string& suite) {
  heunkit::SamplePlan plan;  // seed 42, 20 draws per rule: the pinned plan
  return heunkit::run_suite(suite, plan);
}

double max_residual(const heunkit::IdentityReport& r) {
  double m = 0.0;
  for (const auto& s : r.suites)
    for (const auto& c : s.cases) m = std::max(m, c.residual);
  return m;
}

std::string summarize(const heunkit::IdentityReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "cases=%zu passed=%zu max_residual=%.3g",
                r.total_cases(), r.total_passed(), max_residual(r));
  return buf;
}

std::string summarize2(const heunkit::IdentityReport& a,
                       const heunkit::IdentityReport& b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "cases=%zu passed=%zu max_residual=%.3g",
                a.total_cases() + b.total_cases(),
                a.total_passed() + b.total_passed(),
                std::max(max_residual(a), max_residual(b)));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";

  criterion(1, "gauss-transform-catalog", [](bool& ok) {
    auto all = heunkit::kummer_rules(true);
    auto even = heunkit::kummer_rules(false);
    bool structure = all.size() == 8 && even.size() == 4 &&
                     heunkit::gauss_closure(all).size() == 8;
    int involutions = 0;
    bool abelian = true;
    for (const auto& u : even) {
      if (!u.label.is_identity() &&
          heunkit::compose_gauss_rules(u, u).label.is_identity())
        ++involutions;
      for (const auto& v : even)
        abelian = abelian && heunkit::compose_gauss_rules(u, v).label ==
                                 heunkit::compose_gauss_rules(v, u).label;
    }
    auto rep = run("gauss");
    ok = structure && involutions == 3 && abelian && rep.all_pass();
    return summarize(rep) + (structure ? "" : " catalog-structure-broken") +
           (involutions == 3 ? "" : " involution-count-wrong") +
           (abelian ? "" : " not-abelian");
  });

  criterion(2, "heun-substitution-group", [](bool& ok) {
    auto group = heunkit::generate_hl_group();
    bool structure = group.size() == 24;
    for (const auto& r : group) structure = structure && r.label.even_signed();
    auto rep = run("heun-group");
    ok = structure && rep.all_pass();
    return summarize(rep) + (structure ? "" : " group-structure-broken");
  });

  criterion(3, "quadratic-lifting", [](bool& ok) {
    auto rep = run("quadratic");
    ok = rep.all_pass();
    return summarize(rep);
  });

  criterion(4, "biquadratic-duplication", [](bool& ok) {
    auto rep1 = run("biquadratic");
    auto rep2 = run("h-dup");
    ok = rep1.all_pass() && rep2.all_pass();
    return summarize2(rep1, rep2);
  });

  criterion(5, "hl-3f2-reduction", [](bool& ok) {
    auto rep = run("reduction");
    ok = rep.all_pass();
    return summarize(rep);
  });

  criterion(6, "operator-factorizations", [](bool& ok) {
    auto rep = run("factorization");
    ok = rep.all_pass();
    return summarize(rep);
  });

  criterion(7, "f32-catalog-corollaries", [](bool& ok) {
    bool structure = heunkit::restricted_closure(false).size() == 4 &&
                     heunkit::restricted_closure(true).size() == 8;
    auto rep1 = run("f32-pfaff");
    auto rep2 = run("f32-euler");
    auto rep3 = run("f32-corollaries");
    ok = structure && rep1.all_pass() && rep2.all_pass() && rep3.all_pass();
    char buf[200];
    std::snprintf(buf, sizeof(buf), "cases=%zu passed=%zu max_residual=%.3g%s",
                  rep1.total_cases() + rep2.total_cases() + rep3.total_cases(),
                  rep1.total_passed() + rep2.total_passed() + rep3.total_passed(),
                  std::max({max_residual(rep1), max_residual(rep2),
                            max_residual(rep3)}),
                  structure ? "" : " closure-orders-wrong");
    return std::string(buf);
  });

  criterion(8, "derivative-identity", [](bool& ok) {
    auto rep = run("derivative");
    ok = rep.all_pass();
    return summarize(rep);
  });

  criterion(9, "recurrence-classifier", [](bool& ok) {
    auto rep = run("classifier");
    ok = rep.all_pass();
    return summarize(rep);
  });

  criterion(10, "psymbol-calculus", [](bool& ok) {
    auto rep = run("psymbol");
    ok = rep.all_pass();
    return summarize(rep);
  });

  criterion(11, "cli-determinism", [&tool](bool& ok) {
    if (tool.empty()) {
      ok = false;
      return std::string("no CLI path supplied (argv[1])");
    }
    const std::string out1 = "acceptance_verify_run1.json";
    const std::string out2 = "acceptance_verify_run2.json";
    int rc1 = std::system(("\"" + tool + "\" verify --seed 42 --report \"" +
                           out1 + "\" > /dev/null 2>&1")
                              .c_str());
    int rc2 = std::system(("\"" + tool + "\" verify --seed 42 --report \"" +
                           out2 + "\" > /dev/null 2>&1")
                              .c_str());
    std::string text1 = read_file(out1);
    std::string text2 = read_file(out2);
    bool ran = rc1 == 0 && rc2 == 0;
    bool have_meta = text1.find("\"meta\"") != std::string::npos &&
                     text2.find("\"meta\"") != std::string::npos;
    bool equal = !text1.empty() &&
                 heunkit::strip_meta(text1) == heunkit::strip_meta(text2);
    ok = ran && have_meta && equal;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "exit=(%d,%d) bytes=(%zu,%zu) meta=%s stripped-equal=%s", rc1,
                  rc2, text1.size(), text2.size(), have_meta ? "yes" : "no",
                  equal ? "yes" : "no");
    return std::string(buf);
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
