#include <doctest.h>

#include "pcf/bounds.hpp"
#include "test_util.hpp"

using namespace pcf;
using pcf::test::rel_err;

namespace {
#include "oracles/values.inc"
}

TEST_CASE("xi against quadrature")
{
    for (const auto& r : xi_ref) {
        CAPTURE(r.t);
        const XiValue v = r.t.imag() == 0.0 ? xi(r.t, CutSide::lower) : xi(r.t);
        CHECK(std::abs(v.principal() - r.xi) < 1e-13);
    }
}

TEST_CASE("xi needs a side on the cut")
{
    CHECK_THROWS(xi(cplx(0.5, 0.0)));
    CHECK_NOTHROW(xi(cplx(0.5, 0.0), CutSide::upper));
    const cplx lo = xi(cplx(0.5, 0.0), CutSide::lower).principal(), up = xi(cplx(0.5, 0.0), CutSide::upper).principal();
    CHECK(std::abs(lo - std::conj(up)) < 1e-14);
}

TEST_CASE("eta special values and the xi relation")
{
    CHECK(eta(cplx(0.0, 0.0)).real() == doctest::Approx(eta_0).epsilon(1e-13));
    CHECK(eta(cplx(-1.0 + 1e-12, 0.0)).real() == doctest::Approx(eta_E).epsilon(1e-6));
    CHECK(eta_0 == doctest::Approx(-1.1154602).epsilon(1e-7));
    CHECK(eta_E == doctest::Approx(-1.7706828).epsilon(1e-7));
    for (cplx t : {cplx(2.0, 0.0), cplx(1.5, -0.7), cplx(0.3, -0.2), cplx(-0.5, 0.4)})
        CHECK(std::abs((2.0 / 3.0) * std::pow(eta(t), 1.5) - xi(t).principal()) < 1e-13);
    CHECK_THROWS(eta(cplx(-2.0, 0.0)));
}

TEST_CASE("turning point against a root of d|xi|^2/dr")
{
    for (const auto& r : turning_ref) {
        CAPTURE(r.theta);
        const TurningPoint tp = turning_point(SpectralParameter(1.0, r.theta));
        CHECK(tp.r_star == doctest::Approx(r.r_star).epsilon(1e-12));
        CHECK(std::abs(dmod2_dr(tp.r_star, r.theta)) < 1e-10);
        CHECK(tp.r_star <= std::sqrt(2.0) + 1e-12);
    }
    // at theta = 0 the turning point is t = 1
    CHECK(turning_point(SpectralParameter(9.0, 0.0)).x_star.real() == doctest::Approx(3.0));
}

TEST_CASE("z_lambda and x_lambda are inverse")
{
    const auto lam = SpectralParameter::polar(4.0, pi / 3);
    for (cplx z : {cplx(3.0, 1.0), cplx(-1.0, 2.0), cplx(0.5, -2.0)}) CHECK(std::abs(z_of_x(x_of_z(z, lam), lam) - z) < 1e-12);
    for (double x : {0.2, 1.0, 2.5, 6.0}) CHECK(rel_err(x_of_z(z_of_x(x, lam), lam), cplx(x)) < 1e-12);
}

TEST_CASE("Liouville form: A'' = (z + V0) A")
{
    const double h = 1e-4;
    for (const auto& lam : {SpectralParameter::polar(3.0, pi / 4), SpectralParameter(6.0, 0.0), SpectralParameter::polar(5.0, 2.5)}) {
        for (double x : {0.7, 1.5, 3.0}) {
            CAPTURE(x);
            const auto p = a_nu_from_psi(cplx(x + h), lam, SolutionVariant::zero);
            const auto m = a_nu_from_psi(cplx(x - h), lam, SolutionVariant::zero);
            const auto c = a_nu_from_psi(cplx(x), lam, SolutionVariant::zero);
            const cplx second = (p.dA - m.dA) / (p.z - m.z);
            CHECK(rel_err(second, (c.z + V0_at_x(x, lam)) * c.A) < 1e-6);
        }
    }
}

TEST_CASE("v(eta) decays like -7/64 eta^-2")
{
    const double e = 1e4;
    CHECK((v_eta(cplx(e, 0.0)) * e * e).real() == doctest::Approx(-7.0 / 64.0).epsilon(1e-3));
}

TEST_CASE("Gamma_lambda passes through the turning point")
{
    const auto lam = SpectralParameter::polar(16.0, pi / 4);
    const GammaContour g = gamma_contour(lam, 12.0, 200);
    const TurningPoint tp = turning_point(lam);
    double best = 1e300;
    for (const cplx& z : g.nodes) best = std::min(best, std::abs(z));
    CHECK(best >= std::abs(tp.z_star) - 1e-12);
    CHECK(best <= std::abs(tp.z_star) * (1.0 + 1e-3));
}
