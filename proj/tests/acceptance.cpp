// Acceptance run: one PASS/FAIL line per criterion. Usage: pcf_acceptance [OUT_DIR]
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "pcf/bounds.hpp"
#include "pcf/harness/campaigns.hpp"

namespace fs = std::filesystem;
using namespace pcf;
using namespace pcf::harness;

namespace {

// Pinned tolerances.
constexpr double closed_form_tol = 1e-8;
constexpr double airy_identity_tol = 1e-10;
constexpr double airy_wronskian_tol = 1e-12;
constexpr double psi_connection_tol = 1e-6;
constexpr double spot_target = 0.087;
constexpr double spot_halfwidth = 1e-3;
constexpr double lemma_min_samples = 1e4;
constexpr double wronskian_closed_form_tol = 1e-3;
constexpr double wronskian_constancy_tol = 1e-6;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) { return format_double(v); }

bool checks_pass(const Report& rep, const std::vector<std::string>& names, std::string& detail)
{
    bool ok = true;
    for (const auto& n : names) {
        const CheckResult* c = rep.find(n);
        if (!c) {
            detail += " missing:" + n;
            ok = false;
            continue;
        }
        detail += " " + n + "=" + fmt(c->observed);
        ok = ok && c->passed();
    }
    return ok;
}

bool prefix_checks_pass(const Report& rep, const std::string& prefix, std::string& detail)
{
    bool ok = true;
    long long n = 0;
    for (const auto& c : rep.checks) {
        if (c.name.rfind(prefix, 0) != 0) continue;
        ++n;
        if (!c.passed()) {
            ok = false;
            detail += " failed:" + c.name + "=" + fmt(c.observed);
        }
    }
    detail += " checks=" + std::to_string(n);
    return ok && n > 0;
}

CampaignConfig config_for(Command c, const fs::path& out, int jobs = 1)
{
    CampaignConfig cfg = default_config(c);
    cfg.output_dir = out.string();
    cfg.jobs = jobs;
    cfg.validate();
    return cfg;
}

Report run_and_write(const CampaignConfig& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    Report rep = run_command(cfg);
    write_report(cfg.output_dir, rep, cfg.echo(), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return rep;
}

Outcome criterion_closed_forms()
{
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double x = 6.0 * k / 199.0;
        const double g = std::exp(-x * x / 2);
        const cplx p1 = psi(x, SpectralParameter(1.0, 0.0)).psi;
        worst = std::max(worst, std::abs(p1 - g) / g);
        const double w3 = x * std::sqrt(2.0) * g;
        const cplx p3 = psi(x, SpectralParameter(3.0, 0.0)).psi;
        worst = std::max(worst, x == 0.0 ? std::abs(p3) : std::abs(p3 - w3) / w3);
    }
    return {worst < closed_form_tol, "max_rel=" + fmt(worst)};
}

Outcome criterion_airy()
{
    double ident = 0.0, wr = 0.0;
    const cplx e1 = std::polar(1.0, -pi / 3), e2 = std::polar(1.0, pi / 3);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const cplx z = std::polar(0.5 * (i + 1), -pi + 2 * pi * (j + 0.5) / 10.0);
            const cplx a = airy(z).ai, aw = airy(z * omega).ai, ab = airy(z * omega_bar).ai;
            ident = std::max(ident, std::abs(a - e1 * aw - e2 * ab) / std::max({1.0, std::abs(aw), std::abs(ab)}));
            const AiryValue A = airy(z), B = airy_bi(z);
            const cplx w = A.ai * B.ai_prime - A.ai_prime * B.ai;
            wr = std::max(wr, std::abs(w - 1.0 / pi) / std::max(1.0, std::abs(A.ai * B.ai_prime)));
        }
    return {ident < airy_identity_tol && wr < airy_wronskian_tol, "identity=" + fmt(ident) + " wronskian=" + fmt(wr) + " probes=100"};
}

Outcome criterion_psi_connection()
{
    const cplx lams[] = {cplx(1.0, 1.0), cplx(0.0, 2.0), std::polar(4.0, pi / 3), std::polar(4.0, 9 * pi / 10)};
    double worst = 0.0;
    long long n = 0;
    for (const cplx& l : lams)
        for (double x : {0.5, 1.0, 2.0, 4.0})
            for (const auto& r : psi_connection_residuals(x, SpectralParameter::from_complex(l))) {
                worst = std::max(worst, r.residual);
                ++n;
            }
    return {worst < psi_connection_tol, "max_residual=" + fmt(worst) + " samples=" + std::to_string(n)};
}

Outcome criterion_wronskians()
{
    const cplx probes[] = {cplx(1.0, 0.5), cplx(-0.5, 1.5), cplx(2.0, -0.3), cplx(0.3, 0.2)};
    double closed = 0.0, drift = 0.0;
    std::size_t count = 0;
    for (const auto& lam : {SpectralParameter::polar(2.0, pi / 2), SpectralParameter::polar(4.0, pi / 4)}) {
        std::vector<std::vector<NamedResidual>> rows;
        for (const cplx& z : probes) rows.push_back(wronskian_check(lam, z));
        count = rows[0].size();
        for (const auto& row : rows)
            for (std::size_t k = 0; k < row.size(); ++k) {
                closed = std::max(closed, row[k].residual);
                drift = std::max(drift, std::abs(row[k].value - rows[0][k].value) / std::abs(rows[0][k].value));
            }
    }
    return {closed < wronskian_closed_form_tol && drift < wronskian_constancy_tol,
            "identities=" + std::to_string(count) + " max_rel=" + fmt(closed) + " probe_drift=" + fmt(drift)};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome criterion_determinism(const fs::path& root)
{
    std::string detail;
    bool ok = true;
    long long files = 0;
    for (Command c : {Command::verify_lemmas, Command::sweep_estimates, Command::picard}) {
        CampaignConfig a = config_for(c, root / "det_j1" / command_name(c), 1);
        CampaignConfig b = config_for(c, root / "det_j3" / command_name(c), 3);
        if (c == Command::picard) {
            apply_assignment(a, "lambda", "4@0; 16@pi/4");
            apply_assignment(b, "lambda", "4@0; 16@pi/4");
        }
        run_and_write(a);
        run_and_write(b);
        for (const auto& e : fs::directory_iterator(a.output_dir)) {
            if (e.path().extension() != ".csv") continue;
            ++files;
            const fs::path other = fs::path(b.output_dir) / e.path().filename();
            if (!fs::exists(other) || slurp(e.path()) != slurp(other)) {
                ok = false;
                detail += " differs:" + e.path().filename().string();
            }
        }
    }
    return {ok && files > 0, "csv_files=" + std::to_string(files) + " jobs=1,3" + detail};
}

} // namespace

int main(int argc, char** argv)
{
    const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance-out");
    fs::create_directories(root);

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
    Report verify, sweep, pic, appb;
    bool ran = false;
    auto campaigns = [&] {
        if (ran) return;
        ran = true;
        verify = run_and_write(config_for(Command::verify_lemmas, root / "verify-lemmas"));
        sweep = run_and_write(config_for(Command::sweep_estimates, root / "sweep-estimates"));
        pic = run_and_write(config_for(Command::picard, root / "picard"));
        appb = run_and_write(config_for(Command::appendix_b, root / "appendix-b"));
    };

    criteria.push_back({"closed-form psi for lambda = 1, 3", criterion_closed_forms});
    criteria.push_back({"Airy connection identity and Wronskian", criterion_airy});
    criteria.push_back({"psi connection formulas", criterion_psi_connection});
    criteria.push_back({"envelope ratios per variant", [&] {
                            campaigns();
                            Outcome o;
                            std::vector<std::string> names;
                            for (SolutionVariant v : all_variants) {
                                const std::string vf = variant_file_name(v);
                                names.push_back("sweep." + vf + ".in_particular_sup");
                                names.push_back("sweep." + vf + ".in_particular_points");
                            }
                            names.push_back("sweep.spot_lambda1_x2");
                            o.pass = checks_pass(sweep, names, o.detail);
                            const double spot = sweep.summary.value("spot_lambda1_x2_ratio", 0.0);
                            o.detail += " spot_ratio=" + fmt(spot);
                            o.pass = o.pass && std::abs(spot - spot_target) <= spot_halfwidth;
                            return o;
                        }});
    criteria.push_back({"Olver baseline", [&] {
                            campaigns();
                            Outcome o;
                            o.pass = checks_pass(sweep, {"olver.psi_ratio", "olver.dpsi_ratio"}, o.detail);
                            return o;
                        }});
    criteria.push_back({"lemma suites", [&] {
                            campaigns();
                            Outcome o;
                            o.pass = verify.all_pass() && prefix_checks_pass(verify, "", o.detail);
                            const double samples = verify.summary.value("total_samples", 0.0);
                            o.detail += " samples=" + fmt(samples);
                            o.pass = o.pass && samples >= lemma_min_samples;
                            return o;
                        }});
    criteria.push_back({"Picard against the psi oracle", [&] {
                            campaigns();
                            Outcome o;
                            o.pass = checks_pass(pic, {"picard.oracle_gap", "picard.probe_count", "picard.failed_runs", "picard.zero_potential_hook", "picard.contraction_scaling"},
                                                 o.detail);
                            return o;
                        }});
    criteria.push_back({"derivative bound", [&] {
                            campaigns();
                            Outcome o;
                            o.pass = checks_pass(pic, {"picard.derivative_bound_psi", "picard.derivative_bound_picard"}, o.detail);
                            return o;
                        }});
    criteria.push_back({"Wronskian closed forms", criterion_wronskians});
    criteria.push_back({"contour integral ratios", [&] {
                            campaigns();
                            Outcome o;
                            o.pass = appb.all_pass() && prefix_checks_pass(appb, "appendix_b.", o.detail);
                            return o;
                        }});
    criteria.push_back({"determinism across --jobs", [&] { return criterion_determinism(root); }});

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu %s:%s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(), secs);
        std::fflush(stdout);
        all = all && o.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
