#include <sstream>
#include <stdexcept>

#include "polyfun/cli/harness.hpp"
#include "polyfun/cli/serialize.hpp"

namespace polyfun::cli {

namespace {

Json report_json(const Report& r, bool include_ms)
{
    Json j;
    j["schema"] = kReportSchema;
    j["check"] = r.check;
    j["params"] = Json::object();
    for (const auto& [k, v] : r.params)
        j["params"][k] = v;
    j["verdict"] = verdict_name(r.verdict);
    if (!r.note.empty())
        j["note"] = r.note;
    j["evidence"] = Json::array();
    for (const auto& t : r.evidence) {
        Json tj;
        tj["name"] = t.name;
        tj["columns"] = t.columns;
        tj["rows"] = t.rows;
        j["evidence"].push_back(tj);
    }
    if (include_ms)
        j["ms"] = r.ms;
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_line(std::ostringstream& out, const std::vector<std::string>& xs)
{
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? "," : "") << csv_field(xs[i]);
    out << "\n";
}

void write_csv(std::ostringstream& out, const Report& r)
{
    bool first = true;
    for (const auto& t : r.evidence) {
        if (!first)
            out << "\n";
        first = false;
        csv_line(out, t.columns);
        for (const auto& row : t.rows)
            csv_line(out, row);
    }
}

void write_text(std::ostringstream& out, const Report& r, bool include_ms)
{
    out << r.check << ": " << verdict_name(r.verdict);
    if (include_ms)
        out << " (" << static_cast<long>(r.ms) << " ms)";
    out << "\n";
    if (!r.params.empty()) {
        out << "  params:";
        for (const auto& [k, v] : r.params)
            out << " " << k << "=" << v;
        out << "\n";
    }
    if (!r.note.empty())
        out << "  note: " << r.note << "\n";
    for (const auto& t : r.evidence) {
        out << "  [" << t.name << "]\n";
        for (const auto& row : t.rows) {
            out << "   ";
            for (std::size_t i = 0; i < row.size(); ++i)
                out << " " << t.columns[i] << "=" << row[i];
            out << "\n";
        }
    }
}

void check_format(const std::string& format)
{
    if (format != "json" && format != "csv" && format != "text")
        throw std::invalid_argument("unknown format: " + format);
}

} // namespace

std::string emit_report(const Report& r, const std::string& format, bool include_ms)
{
    check_format(format);
    std::ostringstream out;
    if (format == "json")
        out << report_json(r, include_ms).dump(2) << "\n";
    else if (format == "csv")
        write_csv(out, r);
    else
        write_text(out, r, include_ms);
    return out.str();
}

std::string emit_reports(const std::vector<Report>& rs, const std::string& format, bool include_ms)
{
    check_format(format);
    if (format == "json") {
        Json j = Json::array();
        for (const auto& r : rs)
            j.push_back(report_json(r, include_ms));
        return j.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i && format == "csv")
            out += "\n";
        out += emit_report(rs[i], format, include_ms);
    }
    return out;
}

} // namespace polyfun::cli
