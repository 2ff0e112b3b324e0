#ifndef PCF_HARNESS_REPORT_HPP
#define PCF_HARNESS_REPORT_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pcf::harness {

/** \brief Shortest round-trip decimal form of a double ("nan", "inf", "-inf" for non-finite). */
std::string format_double(double v);

class CsvTable {
public:
    CsvTable() = default;
    CsvTable(std::string name, std::vector<std::string> header) : name_(std::move(name)), header_(std::move(header)) {}

    /** Cells are appended left to right; finish a row with end_row(). */
    CsvTable& cell(double v);
    CsvTable& cell(long long v);
    CsvTable& cell(int v) { return cell(static_cast<long long>(v)); }
    CsvTable& cell(std::size_t v) { return cell(static_cast<long long>(v)); }
    CsvTable& cell(bool v) { return cell(static_cast<long long>(v ? 1 : 0)); }
    CsvTable& cell(const std::string& v);
    CsvTable& cell(const char* v) { return cell(std::string(v)); }
    void end_row();

    const std::string& name() const { return name_; }
    std::string file_name() const { return name_ + ".csv"; }
    std::size_t rows() const { return rows_.size(); }
    std::string str() const;

private:
    std::string name_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::string> pending_;
};

enum class Status { pass, fail };

/** \brief Outcome of one configured check. */
struct CheckResult {
    std::string name;
    Status status = Status::fail;
    std::string metric;          ///< what observed measures, e.g. "sup_ratio" or "min_margin"
    double observed = 0.0;
    std::optional<double> limit; ///< ceiling or floor the observation was compared against
    long long samples = 0;
    std::string note;

    bool passed() const { return status == Status::pass; }
};

CheckResult check_at_most(std::string name, std::string metric, double observed, double ceiling, long long samples, std::string note = {});
CheckResult check_at_least(std::string name, std::string metric, double observed, double floor, long long samples, std::string note = {});

struct Report {
    std::string command;
    std::vector<CheckResult> checks;
    std::vector<CsvTable> tables;
    nlohmann::json summary = nlohmann::json::object();

    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
};

/** \brief Writes every table and manifest.json into \p dir (created if missing). */
void write_report(const std::string& dir, const Report& report, const nlohmann::json& config_echo, double wall_seconds);

} // namespace pcf::harness

#endif
