#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sturan/verify.hpp"

namespace sturan {

enum class ReportFormat { Json, Csv };
ReportFormat parse_report_format(const std::string& s);

/// JSON is an array of objects with keys in the order theorem_id, params, formula_value, computed_value,
/// witnesses_expected, witnesses_found, verdict, mode; floats carry 15
/// significant digits. CSV has a header row and one row per check, with
/// witnesses joined by ';' and params as key=value pairs joined by ';'.
std::string render_checks(const std::vector<TheoremCheck>& checks, ReportFormat format);
/// A single check as a JSON object.
std::string render_check(const TheoremCheck& check);
std::string render_comparison(const ComparisonReport& report, ReportFormat format);

/// Writes the text to `path`, or to stdout when path is empty or "-".
/// Throws IoError naming the path.
void emit_report(const std::vector<TheoremCheck>& checks, ReportFormat format, const std::filesystem::path& path);
void emit_report(const ComparisonReport& report, ReportFormat format, const std::filesystem::path& path);

/// Parses CSV produced by render_checks back into rows of fields (quotes
/// handled), for round-trip testing and downstream tooling.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace sturan
