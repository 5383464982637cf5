#pragma once

#include <string>
#include <vector>

#include "tlteach/harness.hpp"

namespace tlteach {

inline constexpr const char* kCsvHeader = "suite,method,a,session,an_cost,al_cost,steps,solver_ms,completed";

/// One row per session. `completed` is true, false or TIMEOUT.
std::string to_csv(const ExperimentReport& r);
/// One row per (method, a) summary followed by the deltas.
std::string summary_csv(const ExperimentReport& r);

/// Full report, transcripts included; trajectories use the comma-separated text form.
std::string to_json(const ExperimentReport& r);
ExperimentReport report_from_json(const std::string& text);

/// Alphabet used to print and read trajectories for the report's domain name.
StateDomain report_domain(const std::string& name);

enum class ReportFormat { Csv, Json };

/// Writes `<dir>/<suite>.csv` plus `<dir>/<suite>_summary.csv`, or `<dir>/<suite>.json`.
/// Returns the written paths. Errors carry the failing path.
std::vector<std::string> emit(const ExperimentReport& r, ReportFormat format, const std::string& dir);

}  // namespace tlteach
