#pragma once

#include <string>
#include <vector>

#include "heunkit/report.hpp"

namespace heunkit {

// The identity suites, in execution order: gauss, heun-group, quadratic,
// biquadratic, h-dup, reduction, factorization, f32-pfaff, f32-euler,
// f32-corollaries, derivative, classifier, psymbol.
const std::vector<std::string>& verifier_suite_names();

bool is_verifier_suite(const std::string& name);

// Runs one suite; unknown names raise usage_error.  The report is
// deterministic given (seed, plan) apart from its meta line.
IdentityReport run_suite(const std::string& name, const SamplePlan& plan);

// Runs every suite in order into a single report.
IdentityReport run_all(const SamplePlan& plan);

}
