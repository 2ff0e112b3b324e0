#include "pcf/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pcf/harness/report.hpp"

namespace pcf::harness {

const char* command_name(Command c)
{
    switch (c) {
    case Command::verify_lemmas: return "verify-lemmas";
    case Command::sweep_estimates: return "sweep-estimates";
    case Command::picard: return "picard";
    case Command::appendix_b: return "appendix-b";
    case Command::gamma_trace: return "gamma-trace";
    }
    return "unknown";
}

std::optional<Command> parse_command(const std::string& s)
{
    for (Command c : {Command::verify_lemmas, Command::sweep_estimates, Command::picard, Command::appendix_b, Command::gamma_trace})
        if (s == command_name(c)) return c;
    return std::nullopt;
}

std::vector<double> XGrid::points() const
{
    std::vector<double> out;
    if (count == 1) return {min};
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        double u = static_cast<double>(i) / (count - 1);
        if (grading == "sqrt") u = u * u;
        out.push_back(i + 1 == count ? max : min + (max - min) * u);
    }
    return out;
}

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

} // namespace

double parse_real(const std::string& raw)
{
    const std::string s = trim(raw);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) fail(ErrorKind::config, "not a number: '" + raw + "'");
    return v;
}

double parse_angle(const std::string& raw)
{
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    const auto p = s.find("pi");
    if (p == std::string::npos) return parse_real(s);
    std::string coef = s.substr(0, p);
    std::string rest = s.substr(p + 2);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double c = 1.0;
    if (coef == "-") c = -1.0;
    else if (!coef.empty() && coef != "+") c = parse_real(coef);
    double d = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/') fail(ErrorKind::config, "malformed angle: '" + raw + "'");
        d = parse_real(rest.substr(1));
        if (d == 0.0) fail(ErrorKind::config, "zero divisor in angle: '" + raw + "'");
    }
    return c * pi / d;
}

double CampaignConfig::tolerance(const std::string& name, double fallback) const
{
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

double CampaignConfig::ceiling(const std::string& name, double fallback) const
{
    const auto it = ceilings.find(name);
    return it == ceilings.end() ? fallback : it->second;
}

void CampaignConfig::validate() const
{
    if (!(delta > 0.0 && delta < pi / 5.0)) fail(ErrorKind::config, "delta must lie in (0, pi/5)");
    if (lambda_grid.empty()) fail(ErrorKind::config, "lambda grid is empty");
    for (const auto& l : lambda_grid)
        if (!l.valid()) fail(ErrorKind::config, "lambda grid needs |lambda| >= 1/2");
    if (x_grid.count < 1) fail(ErrorKind::config, "x grid is empty");
    if (!(x_grid.max >= x_grid.min) || x_grid.min < 0.0) fail(ErrorKind::config, "x grid needs 0 <= x_min <= x_max");
    if (x_grid.grading != "uniform" && x_grid.grading != "sqrt") fail(ErrorKind::config, "x_grading must be uniform or sqrt");
    if (variants.empty()) fail(ErrorKind::config, "variant list is empty");
    for (const auto& [k, v] : ceilings)
        if (!(v > 0.0)) fail(ErrorKind::config, "ceiling " + k + " must be positive");
    for (const auto& [k, v] : tolerances)
        if (!(v > 0.0)) fail(ErrorKind::config, "tolerance " + k + " must be positive");
    if (jobs < 1) fail(ErrorKind::config, "jobs must be at least 1");
}

nlohmann::json CampaignConfig::echo() const
{
    nlohmann::json lams = nlohmann::json::array();
    for (const auto& l : lambda_grid) lams.push_back({{"modulus", l.modulus}, {"arg", l.arg()}});
    nlohmann::json vs = nlohmann::json::array();
    for (auto v : variants) vs.push_back(variant_name(v));
    return {{"command", command_name(command)},
            {"delta", delta},
            {"lambda_grid", lams},
            {"x_grid", {{"min", x_grid.min}, {"max", x_grid.max}, {"count", x_grid.count}, {"grading", x_grid.grading}}},
            {"variants", vs},
            {"tolerances", tolerances},
            {"ceilings", ceilings},
            {"seed", seed}};
}

namespace {

std::vector<SpectralParameter> product_grid(const std::vector<double>& moduli, const std::vector<double>& args)
{
    std::vector<SpectralParameter> out;
    for (double m : moduli)
        for (double a : args) out.push_back(SpectralParameter::polar(m, a));
    return out;
}

} // namespace

CampaignConfig default_config(Command c)
{
    CampaignConfig cfg;
    cfg.command = c;
    cfg.variants.assign(std::begin(all_variants), std::end(all_variants));
    const double d = cfg.delta;
    switch (c) {
    case Command::verify_lemmas:
        cfg.lambda_grid = product_grid({1.0, 4.0, 16.0}, {0.0, d / 2, d, pi / 4, pi / 2, 3 * pi / 4, pi - d, pi});
        break;
    case Command::sweep_estimates: {
        std::vector<double> args;
        for (int k = 0; k <= 12; ++k) args.push_back(k * pi / 12.0);
        cfg.lambda_grid = product_grid({1.0, 2.0, 4.0, 8.0, 16.0}, args);
        cfg.x_grid = {0.0, 6.0, 121, "uniform"};
        break;
    }
    case Command::picard: cfg.lambda_grid = product_grid({4.0, 16.0, 64.0}, {0.0, pi / 4, pi / 2, 3 * pi / 4}); break;
    case Command::appendix_b: cfg.lambda_grid = product_grid({1.0, 10.0, 100.0}, {0.0, d, pi / 2, pi - d}); break;
    case Command::gamma_trace:
        cfg.lambda_grid = product_grid({1.0, 4.0, 16.0}, {0.0, pi / 4, pi / 2, 3 * pi / 4, pi});
        cfg.x_grid = {0.0, 8.0, 401, "sqrt"};
        break;
    }
    return cfg;
}

namespace {

std::vector<double> parse_list(const std::string& v, bool angles)
{
    std::vector<double> out;
    for (const auto& item : split(v, ',')) out.push_back(angles ? parse_angle(item) : parse_real(item));
    if (out.empty()) fail(ErrorKind::config, "empty list");
    return out;
}

} // namespace

void apply_assignment(CampaignConfig& cfg, const std::string& key_raw, const std::string& value_raw)
{
    const std::string key = trim(key_raw), value = trim(value_raw);
    auto as_int = [&](const std::string& v) {
        const double d = parse_real(v);
        if (d != std::floor(d)) fail(ErrorKind::config, key + " must be an integer");
        return static_cast<long long>(d);
    };
    if (key == "delta") cfg.delta = parse_angle(value);
    else if (key == "lambda") {
        const auto parts = split(value, ';');
        std::vector<SpectralParameter> grid;
        for (const auto& p : parts) {
            const auto at = p.find('@');
            if (at == std::string::npos) fail(ErrorKind::config, "lambda entries look like modulus@arg");
            const double m = parse_real(p.substr(0, at));
            const double a = parse_angle(p.substr(at + 1));
            if (!(m > 0.0) || a < 0.0 || a > pi + 1e-15) fail(ErrorKind::config, "lambda needs modulus > 0 and arg in [0, pi]");
            grid.push_back(SpectralParameter::polar(m, std::min(a, pi)));
        }
        cfg.lambda_grid = grid;
    } else if (key == "lambda_moduli" || key == "lambda_args") {
        std::vector<double> moduli, args;
        for (const auto& l : cfg.lambda_grid) {
            if (std::find(moduli.begin(), moduli.end(), l.modulus) == moduli.end()) moduli.push_back(l.modulus);
            if (std::find(args.begin(), args.end(), l.arg()) == args.end()) args.push_back(l.arg());
        }
        if (key == "lambda_moduli") moduli = parse_list(value, false);
        else args = parse_list(value, true);
        for (double a : args)
            if (a < 0.0 || a > pi + 1e-15) fail(ErrorKind::config, "lambda_args must lie in [0, pi]");
        for (double& a : args) a = std::min(a, pi);
        for (double m : moduli)
            if (!(m > 0.0)) fail(ErrorKind::config, "lambda_moduli must be positive");
        cfg.lambda_grid = product_grid(moduli, args);
    } else if (key == "x_min") cfg.x_grid.min = parse_real(value);
    else if (key == "x_max") cfg.x_grid.max = parse_real(value);
    else if (key == "x_count") cfg.x_grid.count = static_cast<int>(as_int(value));
    else if (key == "x_grading") cfg.x_grid.grading = value;
    else if (key == "variants") {
        cfg.variants.clear();
        for (const auto& v : split(value, ',')) {
            const auto pv = parse_variant(v);
            if (!pv) fail(ErrorKind::config, "unknown variant '" + v + "'");
            cfg.variants.push_back(*pv);
        }
    } else if (key.rfind("tol.", 0) == 0) cfg.tolerances[key.substr(4)] = parse_real(value);
    else if (key.rfind("ceiling.", 0) == 0) cfg.ceilings[key.substr(8)] = parse_real(value);
    else if (key == "out") cfg.output_dir = value;
    else if (key == "seed") {
        const long long s = as_int(value);
        if (s < 0) fail(ErrorKind::config, "seed must be nonnegative");
        cfg.seed = static_cast<std::uint64_t>(s);
    } else if (key == "jobs") cfg.jobs = static_cast<int>(as_int(value));
    else fail(ErrorKind::config, "unknown key '" + key + "'");
}

void apply_config_text(CampaignConfig& cfg, const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(ErrorKind::config, "line " + std::to_string(lineno) + ": expected key = value");
        try {
            apply_assignment(cfg, line.substr(0, eq), line.substr(eq + 1));
        } catch (const Error& e) {
            fail(ErrorKind::config, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void apply_config_file(CampaignConfig& cfg, const std::string& path)
{
    std::ifstream is(path);
    if (!is) fail(ErrorKind::config, "cannot read config file " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    apply_config_text(cfg, ss.str());
}

std::string lambda_tag(const SpectralParameter& lam)
{
    return "m" + format_double(lam.modulus) + "_a" + format_double(lam.arg());
}

} // namespace pcf::harness
