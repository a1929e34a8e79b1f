#pragma once

#include <string>

#include "liegeo/analysis.hpp"

namespace liegeo {

/// Machine-readable report; field names are stable and documented in the
/// README. The json form is the contract used by the test suites.
std::string analysis_to_json(const FullAnalysis& a);
std::string analysis_to_text(const FullAnalysis& a);

}  // namespace liegeo
