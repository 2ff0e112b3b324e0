#ifndef PCF_HARNESS_CONFIG_HPP
#define PCF_HARNESS_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcf/bounds.hpp"

namespace pcf::harness {

enum class Command { verify_lemmas, sweep_estimates, picard, appendix_b, gamma_trace };

const char* command_name(Command c);
std::optional<Command> parse_command(const std::string& s);

/** \brief Sample grid in x. grading is "uniform" or "sqrt" (denser near x_min). */
struct XGrid {
    double min = 0.0;
    double max = 6.0;
    int count = 121;
    std::string grading = "uniform";

    std::vector<double> points() const;
};

/**
 * \brief Campaign configuration.
 *
 * File format: one "key = value" per line, '#' starts a comment. Keys:
 * delta, lambda ("modulus@arg; modulus@arg"), lambda_moduli and lambda_args
 * (comma lists forming a product grid), x_min, x_max, x_count, x_grading,
 * variants ("0,+,-,*"), tol.NAME, ceiling.NAME, out, seed, jobs.
 * Angles accept plain radians or forms like "pi/4", "3pi/4", "0.5*pi".
 */
struct CampaignConfig {
    Command command = Command::verify_lemmas;
    double delta = pi / 6.0;
    std::vector<SpectralParameter> lambda_grid;
    XGrid x_grid;
    std::vector<SolutionVariant> variants;
    std::map<std::string, double> tolerances;
    std::map<std::string, double> ceilings;
    std::string output_dir;
    std::uint64_t seed = 20240601;
    int jobs = 1;

    double tolerance(const std::string& name, double fallback) const;
    double ceiling(const std::string& name, double fallback = 10.0) const;

    /** \brief Throws a config error when an invariant is violated. */
    void validate() const;
    /** \brief Everything that affects results (jobs and output_dir excluded). */
    nlohmann::json echo() const;
};

CampaignConfig default_config(Command c);

/** \brief Parses an angle: radians, or a multiple / fraction of pi. */
double parse_angle(const std::string& s);
double parse_real(const std::string& s);

/** \brief Applies one key = value assignment; unknown keys are config errors. */
void apply_assignment(CampaignConfig& cfg, const std::string& key, const std::string& value);
void apply_config_text(CampaignConfig& cfg, const std::string& text);
void apply_config_file(CampaignConfig& cfg, const std::string& path);

/** \brief Tag for file names, e.g. "m4_a0.7853981633974483". */
std::string lambda_tag(const SpectralParameter& lam);

} // namespace pcf::harness

#endif
