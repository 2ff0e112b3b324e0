#include <doctest.h>

#include <cmath>

#include "pcf/harness/campaigns.hpp"
#include "pcf/harness/parallel.hpp"
#include "pcf/harness/suites.hpp"

using namespace pcf;
using namespace pcf::harness;

TEST_CASE("shortest round-trip doubles")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-300) == "1e-300");
    CHECK(format_double(INFINITY) == "inf");
    CHECK(format_double(-INFINITY) == "-inf");
    CHECK(format_double(NAN) == "nan");
    for (double v : {M_PI, 1.0 / 3.0, 2.5e17, -7e-9}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("CSV tables use a header row and LF line ends")
{
    CsvTable t("demo", {"a", "b"});
    t.cell(1.5).cell("x");
    t.end_row();
    CHECK(t.str() == "a,b\n1.5,x\n");
    CHECK(t.file_name() == "demo.csv");
}

TEST_CASE("checks fail on non-finite observations")
{
    CHECK(check_at_most("c", "m", 1.0, 10.0, 1).passed());
    CHECK_FALSE(check_at_most("c", "m", NAN, 10.0, 1).passed());
    CHECK_FALSE(check_at_most("c", "m", INFINITY, 10.0, 1).passed());
    CHECK_FALSE(check_at_least("c", "m", 5.0, 10.0, 1).passed());
}

TEST_CASE("config parsing")
{
    CHECK(parse_angle("3pi/4") == doctest::Approx(3 * pi / 4));
    CHECK(parse_angle("0.5*pi") == doctest::Approx(pi / 2));
    CHECK(parse_angle("pi") == doctest::Approx(pi));
    CHECK(parse_angle("0.25") == doctest::Approx(0.25));

    CampaignConfig cfg = default_config(Command::sweep_estimates);
    apply_config_text(cfg, "# comment\ndelta = pi/8\nlambda = 2@pi/2; 5@0\nvariants = 0,-\nceiling.olver = 4\n");
    CHECK(cfg.delta == doctest::Approx(pi / 8));
    REQUIRE(cfg.lambda_grid.size() == 2);
    CHECK(cfg.lambda_grid[0].arg() == doctest::Approx(pi / 2));
    CHECK(cfg.variants.size() == 2);
    CHECK(cfg.ceiling("olver") == 4.0);
    CHECK(cfg.ceiling("other") == 10.0);
    CHECK_NOTHROW(cfg.validate());

    auto is_config_error = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind() == ErrorKind::config;
        }
        return false;
    };
    CHECK(is_config_error([&] { apply_config_text(cfg, "bogus = 1\n"); }));
    CHECK(is_config_error([&] {
        CampaignConfig c = default_config(Command::picard);
        apply_assignment(c, "delta", "1.0");
        c.validate();
    }));
}

TEST_CASE("parallel_map keeps index order for any job count")
{
    auto f = [](std::size_t i) { return std::sqrt(static_cast<double>(i)) * 3.0; };
    const auto a = parallel_map(100, 1, f);
    const auto b = parallel_map(100, 4, f);
    CHECK(a == b);
    CHECK_THROWS(parallel_map(10, 3, [](std::size_t i) -> int {
        if (i == 7) throw std::runtime_error("boom");
        return 0;
    }));
}

TEST_CASE("in-particular ranges")
{
    const double d = pi / 6;
    CHECK(in_particular_range(SolutionVariant::zero, 0.0, 3.0, 1.0, d));
    CHECK_FALSE(in_particular_range(SolutionVariant::zero, 0.1, 0.5, 1.0, d));
    CHECK(in_particular_range(SolutionVariant::zero, pi / 2, 0.5, 1.0, d));
    CHECK(in_particular_range(SolutionVariant::plus, pi - d, 9.0, 1.0, d));
    CHECK_FALSE(in_particular_range(SolutionVariant::plus, pi - d / 2, 9.0, 1.0, d));
    CHECK(in_particular_range(SolutionVariant::minus, d, 0.5, 1.0, d));
    CHECK_FALSE(in_particular_range(SolutionVariant::minus, d, 1.5, 1.0, d));
    CHECK(in_particular_range(SolutionVariant::star, pi / 2, 1.5, 1.0, d));
    CHECK_FALSE(in_particular_range(SolutionVariant::star, 0.2, 1.5, 1.0, d));
}

TEST_CASE("lemma suites on a coarse grid")
{
    LemmaGrid g = default_lemma_grid(pi / 6);
    g.r_count = 201;
    g.thetas = {0.0, pi / 8, pi / 4, 3 * pi / 8, pi / 2};
    g.lambdas = {SpectralParameter(4.0, 0.0), SpectralParameter::polar(4.0, pi / 2)};
    const SuiteOutput out = run_all_suites(g);
    CHECK_FALSE(out.checks.empty());
    for (const auto& c : out.checks) {
        CAPTURE(c.name);
        CHECK(c.passed());
    }
}
