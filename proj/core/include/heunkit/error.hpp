#pragma once

#include <stdexcept>
#include <string>

namespace heunkit {

// Failure categories surfaced by the library.  Every throw site picks the
// category that names the violated precondition, so callers (and tests) can
// dispatch on kind() instead of parsing messages.
enum class errc {
  invalid_parameter,      // parameter violates a documented admissibility rule
  domain_error,           // evaluation point outside the guaranteed region
  no_convergence,         // series did not meet the tail criterion in budget
  shape_error,            // polynomial/symbol input has the wrong structure
  degenerate_error,       // confluent or otherwise excluded configuration
  puncture_error,         // parametrization evaluated at an excluded point
  singular_map,           // a parameter map hit a pole
  pole_at_sample,         // residual sample collides with a factor pole
  missing_column,         // symbol operation addressed an absent location
  inconsistent_branching, // branch table multiplicities do not sum to degree
  closure_error,          // group closure did not stabilize as required
  zero_leading_coefficient,
  usage_error,            // bad CLI/report request
};

const char* errc_name(errc e) noexcept;

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

}
