#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heunkit/types.hpp"

namespace heunkit {

// Deterministic sampling plan: the same plan always produces the same draws.
struct SamplePlan {
  std::uint64_t seed = 42;
  int draws_per_rule = 20;
  // Half-width of the complex rectangle parameters are drawn from.
  double modulus_bound = 2.0;
  // Arguments are drawn with |x| below this fraction of the convergence
  // radius; must lie in (0, 1).
  double x_radius_fraction = 0.3;
  // When nonnegative, replaces every suite's pinned tolerance.
  double tolerance_override = -1.0;

  void validate() const;
};

// One verified identity instance.  verdict: pass iff residual <= tolerance.
struct IdentityCase {
  std::string rule;
  std::string parameter_draw;
  std::string point_draw;
  double residual = 0.0;
  double tolerance = 0.0;

  bool pass() const noexcept { return residual <= tolerance; }
};

struct SuiteReport {
  std::string name;
  std::vector<IdentityCase> cases;

  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;
};

struct IdentityReport {
  std::string tool_version;
  SamplePlan plan;
  std::vector<SuiteReport> suites;
  // Meta data excluded from the determinism contract.
  std::string timestamp;
  double wall_seconds = 0.0;

  std::size_t total_cases() const noexcept;
  std::size_t total_passed() const noexcept;
  std::size_t total_failed() const noexcept;
  bool all_pass() const noexcept { return total_failed() == 0; }
};

// 17-significant-digit decimal rendering (round-trips doubles exactly);
// non-finite values render as quoted strings.
std::string format_real(double x);
std::string json_number(double x);
std::string format_complex(Complex z);
std::string json_escape(const std::string& s);

// The full report as a JSON document.  Deterministic except for the single
// "meta" line (timestamp and wall time).
std::string render_report(const IdentityReport& r);

// Writes render_report(r) to path; raises on I/O failure.
void write_report_file(const IdentityReport& r, const std::string& path);

// Removes the "meta" line from a rendered report, for determinism
// comparisons between runs.
std::string strip_meta(const std::string& rendered);

}
