#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcf/harness/campaigns.hpp"

namespace {

struct Flags {
    std::string config;
    std::string delta;
    std::string out;
    long long seed = -1;
    std::vector<std::string> ceilings;
    int jobs = 0;
};

void add_flags(CLI::App* sub, Flags& f)
{
    sub->add_option("--config", f.config, "key = value config file");
    sub->add_option("--delta", f.delta, "delta in (0, pi/5); accepts forms like pi/6");
    sub->add_option("--out", f.out, "output directory (default: $PCF_OUT, else pcf-out)");
    sub->add_option("--seed", f.seed, "seed for randomized probe points");
    sub->add_option("--ceiling", f.ceilings, "NAME=R, overrides the ceiling of one check")->take_all();
    sub->add_option("--jobs", f.jobs, "worker threads");
}

pcf::harness::CampaignConfig build_config(pcf::harness::Command cmd, const Flags& f)
{
    using namespace pcf::harness;
    CampaignConfig cfg = default_config(cmd);
    if (!f.config.empty()) apply_config_file(cfg, f.config);
    if (!f.delta.empty()) apply_assignment(cfg, "delta", f.delta);
    if (f.seed >= 0) apply_assignment(cfg, "seed", std::to_string(f.seed));
    for (const auto& c : f.ceilings) {
        const auto eq = c.find('=');
        if (eq == std::string::npos) pcf::fail(pcf::ErrorKind::config, "--ceiling expects NAME=R");
        apply_assignment(cfg, "ceiling." + c.substr(0, eq), c.substr(eq + 1));
    }
    if (f.jobs != 0) cfg.jobs = f.jobs;
    if (!f.out.empty()) cfg.output_dir = f.out;
    if (cfg.output_dir.empty()) {
        const char* env = std::getenv("PCF_OUT");
        cfg.output_dir = env && *env ? env : "pcf-out";
    }
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace pcf::harness;
    CLI::App app{"Quasiclassical verification campaigns for parabolic cylinder functions"};
    app.require_subcommand(1);
    Flags flags;
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (Command c : {Command::verify_lemmas, Command::sweep_estimates, Command::picard, Command::appendix_b, Command::gamma_trace}) {
        CLI::App* s = app.add_subcommand(command_name(c));
        add_flags(s, flags);
        subs.push_back({s, c});
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Command cmd = Command::verify_lemmas;
    for (const auto& [s, c] : subs)
        if (s->parsed()) cmd = c;

    CampaignConfig cfg;
    try {
        cfg = build_config(cmd, flags);
    } catch (const pcf::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        const Report rep = run_command(cfg);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_report(cfg.output_dir, rep, cfg.echo(), wall);
        for (const auto& c : rep.checks) {
            std::printf("%s %s %s=%s", c.passed() ? "PASS" : "FAIL", c.name.c_str(), c.metric.c_str(), format_double(c.observed).c_str());
            if (c.limit) std::printf(" limit=%s", format_double(*c.limit).c_str());
            std::printf(" samples=%lld\n", c.samples);
        }
        std::printf("%s: %zu checks, %s, wrote %s (%.1f s)\n", rep.command.c_str(), rep.checks.size(), rep.all_pass() ? "all pass" : "FAILURES", cfg.output_dir.c_str(),
                    wall);
        return rep.all_pass() ? 0 : 1;
    } catch (const pcf::Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == pcf::ErrorKind::config ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
