#pragma once

#include <string>
#include <utility>
#include <vector>

#include "franel/verdict.hpp"

namespace franel {

inline constexpr const char* kToolVersion = "1.0.0";

enum class ReportFormat { plain, json, csv };

std::optional<ReportFormat> report_format_from_name(std::string_view name);

// Aggregate of verdicts over one suite run or conjecture sweep. results are
// kept in verdict_order; counterexamples and the summary counters are derived
// from them by finalize_report. data carries named value lists (for example
// the raw partial sums behind a sweep) that some runs attach for inspection.
struct ScanReport {
  std::string suite;
  std::string tool_version;
  std::string parameter_grid;
  std::string generated_at;  // RFC 3339 UTC; omitted from stable renders
  std::vector<Verdict> results;
  std::vector<Verdict> counterexamples;
  long total = 0;
  long failed = 0;
  long vacuous = 0;
  std::vector<std::string> errata_notes;
  std::vector<std::pair<std::string, std::vector<Integer>>> data;
};

// Sorts results deterministically and rebuilds counterexamples + summary.
void finalize_report(ScanReport& report);

// Renderers are pure: the same report yields byte-identical text. stable
// additionally drops the generated_at field so runs can be diffed.
std::string render_json(const ScanReport& report, bool stable);
std::string render_csv(const ScanReport& report);
std::string render_plain(const ScanReport& report, bool stable);
std::string render_report(const ScanReport& report, ReportFormat format, bool stable);

// 0 when every verdict holds, 1 otherwise.
int report_exit_code(const ScanReport& report);

// Current wall-clock time as RFC 3339 UTC with second resolution.
std::string current_timestamp();

}  // namespace franel
