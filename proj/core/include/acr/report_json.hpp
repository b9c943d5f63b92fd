#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "acr/analysis.hpp"

namespace acr {

// The verdict fields of a report, used to state the round-trip guarantee:
// summarize(report) == summary_from_json(report_to_json(report)).
struct ReportSummary {
  int schema = 0;
  std::string source;
  std::uint64_t n = 0, r = 0, s = 0, d = 0;
  std::string nondegeneracy;
  std::vector<std::pair<std::string, std::string>> verdicts;  // species, YES/NO
  std::vector<std::string> divisibility;                      // per species status
  bool operator==(const ReportSummary&) const = default;
};

ReportSummary summarize(const AnalysisReport& report);

// Deterministic single-line JSON: fixed key order, no whitespace, rationals
// as strings, indices 1-based. Identical reports serialize byte-identically.
std::string report_to_json(const AnalysisReport& report);

// Error on malformed input or an unsupported schema version.
ReportSummary summary_from_json(const std::string& text);

}  // namespace acr
