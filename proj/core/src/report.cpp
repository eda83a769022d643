#include "heunkit/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "heunkit/error.hpp"

namespace heunkit {

void SamplePlan::validate() const {
  if (draws_per_rule < 1) fail(errc::usage_error, "draws_per_rule must be positive");
  if (!(modulus_bound > 0.0)) fail(errc::usage_error, "modulus_bound must be positive");
  if (!(x_radius_fraction > 0.0) || !(x_radius_fraction < 1.0))
    fail(errc::usage_error, "x_radius_fraction must lie in (0, 1)");
}

std::size_t SuiteReport::passed() const noexcept {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.pass() ? 1 : 0;
  return n;
}

std::size_t SuiteReport::failed() const noexcept { return cases.size() - passed(); }

std::size_t IdentityReport::total_cases() const noexcept {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.cases.size();
  return n;
}

std::size_t IdentityReport::total_passed() const noexcept {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.passed();
  return n;
}

std::size_t IdentityReport::total_failed() const noexcept {
  return total_cases() - total_passed();
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_number(double x) {
  if (!std::isfinite(x)) {
    if (std::isnan(x)) return "\"nan\"";
    return x > 0 ? "\"inf\"" : "\"-inf\"";
  }
  return format_real(x);
}

std::string format_complex(Complex z) {
  std::string out = format_real(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag())) out += "+";
  out += format_real(z.imag());
  out += "i";
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  return out;
}

std::string render_report(const IdentityReport& r) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"tool\": \"heunkit\",\n";
  os << "  \"version\": \"" << json_escape(r.tool_version) << "\",\n";
  os << "  \"plan\": {\"seed\": " << r.plan.seed
     << ", \"draws_per_rule\": " << r.plan.draws_per_rule
     << ", \"modulus_bound\": " << json_number(r.plan.modulus_bound)
     << ", \"x_radius_fraction\": " << json_number(r.plan.x_radius_fraction)
     << ", \"tolerance_override\": " << json_number(r.plan.tolerance_override)
     << "},\n";
  os << "  \"suites\": [\n";
  for (std::size_t i = 0; i < r.suites.size(); ++i) {
    const SuiteReport& s = r.suites[i];
    os << "    {\n";
    os << "      \"name\": \"" << json_escape(s.name) << "\",\n";
    os << "      \"passed\": " << s.passed() << ",\n";
    os << "      \"failed\": " << s.failed() << ",\n";
    os << "      \"cases\": [\n";
    for (std::size_t j = 0; j < s.cases.size(); ++j) {
      const IdentityCase& c = s.cases[j];
      os << "        {\"rule\": \"" << json_escape(c.rule) << "\", \"params\": \""
         << json_escape(c.parameter_draw) << "\", \"x\": \""
         << json_escape(c.point_draw) << "\", \"residual\": " << json_number(c.residual)
         << ", \"tolerance\": " << json_number(c.tolerance) << ", \"verdict\": \""
         << (c.pass() ? "pass" : "fail") << "\"}";
      os << (j + 1 < s.cases.size() ? ",\n" : "\n");
    }
    os << "      ]\n";
    os << "    }" << (i + 1 < r.suites.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"summary\": {\"total\": " << r.total_cases() << ", \"passed\": "
     << r.total_passed() << ", \"failed\": " << r.total_failed() << "},\n";
  os << "  \"meta\": {\"timestamp\": \"" << json_escape(r.timestamp)
     << "\", \"wall_seconds\": " << json_number(r.wall_seconds) << "}\n";
  os << "}\n";
  return os.str();
}

void write_report_file(const IdentityReport& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::usage_error, "cannot open report file: " + path);
  out << render_report(r);
  if (!out) fail(errc::usage_error, "failed writing report file: " + path);
}

std::string strip_meta(const std::string& rendered) {
  std::string out;
  out.reserve(rendered.size());
  std::istringstream in(rendered);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"meta\"") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

}
