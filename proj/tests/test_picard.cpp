#include <doctest.h>

#include "pcf/picard.hpp"
#include "test_util.hpp"

using namespace pcf;
using pcf::test::rel_err;

TEST_CASE("kernel vanishes on the diagonal and matches the Bi form")
{
    for (cplx z : {cplx(1.0, 0.5), cplx(3.0, -1.0)}) {
        CHECK(std::abs(kernel_J(z, z)) < 1e-13);
        const cplx s = z + cplx(0.7, 0.2);
        const cplx j0 = airy(s).ai * airy_bi(z).ai - airy(z).ai * airy_bi(s).ai;
        const cplx want = -pi * j0 * std::exp((2.0 / 3.0) * (std::pow(z, 1.5) - std::pow(s, 1.5)));
        CHECK(rel_err(kernel_J(z, s), want) < 1e-11);
    }
}

TEST_CASE("zero-potential hook returns the Airy seed")
{
    PicardOptions opt;
    opt.zero_potential = true;
    const SpectralParameter lam(16.0, 0.0);
    const cplx z = z_of_x(6.0, lam);
    const PicardRun run = solve_a0(z, lam, pi / 6, opt);
    CHECK(run.converged);
    CHECK(rel_err(run.a_value, airy_a(z)) < 1e-12);
}

TEST_CASE("Picard iteration reproduces the psi oracle")
{
    struct Case {
        double m, arg, x;
        SolutionVariant v;
    };
    const Case cases[] = {
        {4.0, 0.0, 3.0, SolutionVariant::zero},
        {16.0, pi / 4, 2.0, SolutionVariant::zero},
        {16.0, 0.0, 10.0, SolutionVariant::plus},
        {4.0, 3 * pi / 4, 5.0, SolutionVariant::star},
        {4.0, pi / 4, 1.5, SolutionVariant::minus},
    };
    for (const auto& c : cases) {
        CAPTURE(c.m);
        CAPTURE(c.arg);
        CAPTURE(c.x);
        const auto lam = SpectralParameter::polar(c.m, c.arg);
        const cplx z = z_of_x(c.x, lam);
        const PicardRun run = solve_a_variant(c.v, z, lam, pi / 6);
        const ANuValue ref = a_nu_from_psi(c.x, lam, c.v);
        CHECK(run.converged);
        CHECK(rel_err(run.a_value, ref.a) < 1e-8);
        CHECK(rel_err(run.a_derivative, ref.da) < 1e-6);
        CHECK(run.contraction() < 0.1);
    }
}

TEST_CASE("Picard refuses anchors outside the domain")
{
    const SpectralParameter lam(4.0, 0.0);
    CHECK_THROWS_AS(solve_a_variant(SolutionVariant::zero, z_E_point(lam), lam, pi / 6), Error);
}
