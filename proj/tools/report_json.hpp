#pragma once

#include <string>

#include "ctc/classify.hpp"

namespace ctc::report_json {

inline constexpr const char* kSchema = "ctf-report/1";

// Structured rendering of a report under the versioned schema; the inverse
// reconstructs an equal report from the emitted text.
std::string print(const ClassificationReport& report);
ClassificationReport parse(const std::string& text);

bool equal(const ClassificationReport& a, const ClassificationReport& b);

}  // namespace ctc::report_json
