#include <doctest.h>

#include "pcf/bounds.hpp"
#include "test_util.hpp"

using namespace pcf;

TEST_CASE("variant names round trip")
{
    for (SolutionVariant v : all_variants) CHECK(parse_variant(variant_name(v)) == v);
    CHECK_FALSE(parse_variant("x").has_value());
}

TEST_CASE("spot value of the variant-0 envelope at lambda = 1, x = 2")
{
    const SpectralParameter lam(1.0, 0.0);
    const auto dom = theorem_domain_spec(SolutionVariant::zero, lam, pi / 6, select_epsilon(pi / 6));
    const EstimateRecord r = estimate_record(2.0, lam, SolutionVariant::zero, dom);
    CHECK(r.rhs == doctest::Approx(0.418630).epsilon(1e-5));
    CHECK(std::abs(r.ratio - 0.087) <= 1e-3);
    CHECK(r.in_domain);
}

TEST_CASE("Wronskians and connection formulas")
{
    for (const auto& lam : {SpectralParameter::polar(2.0, pi / 2), SpectralParameter::polar(4.0, pi / 4)}) {
        for (cplx z : {cplx(1.0, 0.5), cplx(-0.5, 1.5)}) {
            const auto w = wronskian_check(lam, z);
            CHECK(w.size() == 6);
            for (const auto& r : w) {
                CAPTURE(r.name);
                CHECK(r.residual < 1e-9);
            }
            for (const auto& r : connection_check_A(lam, z)) {
                CAPTURE(r.name);
                CHECK(r.residual < 1e-9);
            }
        }
    }
    CHECK_THROWS(wronskian_check(SpectralParameter(2.0, 0.0), cplx(1.0, 0.0)));
}

TEST_CASE("psi connection residuals")
{
    for (double a : {pi / 4, pi / 2, 3 * pi / 5})
        for (double x : {0.5, 1.0, 2.0, 4.0})
            for (const auto& r : psi_connection_residuals(x, SpectralParameter::polar(4.0, a))) {
                CAPTURE(r.name);
                CHECK(r.residual < 1e-10);
            }
}

TEST_CASE("Olver ratios stay bounded for real lambda")
{
    for (double m : {1.0, 10.0, 100.0})
        for (double x : {0.0, 1.0, 5.0, 12.0}) {
            const auto [a, b] = olver_ratio(x, SpectralParameter(m, 0.0));
            CHECK(a <= 10.0);
            CHECK(b <= 10.0);
        }
}

TEST_CASE("a_nu from psi tends to the Airy seed for large z")
{
    const SpectralParameter lam(64.0, 0.0);
    const ANuValue v = a_nu_from_psi(cplx(20.0), lam, SolutionVariant::zero);
    const cplx seed = airy_scaled(v.z).ai;
    CHECK(pcf::test::rel_err(v.a, seed) < 1e-2);
    CHECK(std::abs(v.da) * std::pow(1.0 + std::abs(v.z), 1.25) <= 10.0);
}
