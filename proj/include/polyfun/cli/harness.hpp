#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyfun::cli {

enum class Verdict { Pass, Fail, WithinCaps };

std::string verdict_name(Verdict v);
// Pass and WithinCaps both count as passing.
bool passed(Verdict v);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct CheckSpec {
    std::string check;
    std::map<std::string, std::string> params;
    // "n,m,D" style caps, meaning depends on the check; empty for defaults.
    std::vector<int> caps;
    // "Q", "Fp:p"; empty for the check's default.
    std::string field;
};

struct Report {
    std::string check;
    std::map<std::string, std::string> params;
    Verdict verdict = Verdict::Fail;
    // Annotation, e.g. why a verdict is only within caps.
    std::string note;
    std::vector<Table> evidence;
    double ms = 0;
};

// Registered check names in a fixed order.
const std::vector<std::string>& registered_checks();
// One-line description of each registered check.
std::string check_summary(const std::string& name);

// Throws std::invalid_argument for unknown checks or malformed parameters and
// CapExceeded when a guard trips.
Report run_check(const CheckSpec& spec);

// "k=v" -> (k, v)
std::pair<std::string, std::string> parse_param(const std::string& text);
// "3" or "2,2,5"
std::vector<int> parse_caps(const std::string& text);

// format is "json", "csv" or "text"; the JSON object carries
// {schema, check, params, verdict, note?, evidence, ms}.
std::string emit_report(const Report& r, const std::string& format, bool include_ms = true);
std::string emit_reports(const std::vector<Report>& rs, const std::string& format, bool include_ms = true);

inline constexpr const char* kReportSchema = "polyfun.report/1";

} // namespace polyfun::cli
