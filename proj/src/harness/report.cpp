#include "pcf/harness/report.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "pcf/errors.hpp"

namespace pcf::harness {

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::string quote_csv(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

CsvTable& CsvTable::cell(double v)
{
    pending_.push_back(format_double(v));
    return *this;
}

CsvTable& CsvTable::cell(long long v)
{
    pending_.push_back(std::to_string(v));
    return *this;
}

CsvTable& CsvTable::cell(const std::string& v)
{
    pending_.push_back(quote_csv(v));
    return *this;
}

void CsvTable::end_row()
{
    if (pending_.size() != header_.size()) fail(ErrorKind::usage, "CSV row width does not match header of " + name_);
    rows_.push_back(std::move(pending_));
    pending_.clear();
}

std::string CsvTable::str() const
{
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return out;
}

CheckResult check_at_most(std::string name, std::string metric, double observed, double ceiling, long long samples, std::string note)
{
    CheckResult c{std::move(name), Status::fail, std::move(metric), observed, ceiling, samples, std::move(note)};
    if (std::isfinite(observed) && observed <= ceiling) c.status = Status::pass;
    return c;
}

CheckResult check_at_least(std::string name, std::string metric, double observed, double floor, long long samples, std::string note)
{
    CheckResult c{std::move(name), Status::fail, std::move(metric), observed, floor, samples, std::move(note)};
    if (std::isfinite(observed) && observed >= floor) c.status = Status::pass;
    return c;
}

bool Report::all_pass() const
{
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

const CheckResult* Report::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

nlohmann::json number_or_string(double v)
{
    if (std::isfinite(v)) return v;
    return format_double(v);
}

} // namespace

void write_report(const std::string& dir, const Report& report, const nlohmann::json& config_echo, double wall_seconds)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(ErrorKind::usage, "cannot create output directory " + dir + ": " + ec.message());
    nlohmann::json artifacts = nlohmann::json::array();
    for (const auto& t : report.tables) {
        const fs::path p = fs::path(dir) / t.file_name();
        std::ofstream os(p, std::ios::binary);
        if (!os) fail(ErrorKind::usage, "cannot write " + p.string());
        os << t.str();
        artifacts.push_back(t.file_name());
    }
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json j{{"name", c.name},
                         {"status", c.passed() ? "pass" : "fail"},
                         {"metric", c.metric},
                         {"observed", number_or_string(c.observed)},
                         {"samples", c.samples}};
        if (c.limit) j["limit"] = *c.limit;
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    nlohmann::json m{{"command", report.command},
                     {"config", config_echo},
                     {"checks", checks},
                     {"all_pass", report.all_pass()},
                     {"artifacts", artifacts},
                     {"summary", report.summary},
                     {"versions", {{"pcf", "1.0.0"}, {"compiler", __VERSION__}, {"cplusplus", static_cast<long>(__cplusplus)}}},
                     {"wall_clock_seconds", wall_seconds}};
    artifacts.push_back("manifest.json");
    m["artifacts"] = artifacts;
    const fs::path mp = fs::path(dir) / "manifest.json";
    std::ofstream os(mp, std::ios::binary);
    if (!os) fail(ErrorKind::usage, "cannot write " + mp.string());
    os << m.dump(2) << '\n';
}

} // namespace pcf::harness
