#include <doctest.h>

#include "pcf/domains.hpp"

using namespace pcf;

TEST_CASE("epsilon selection for delta = pi/6")
{
    CHECK(select_epsilon(pi / 6) == doctest::Approx(pi / 72).epsilon(1e-15));
    const SpectralParameter lam = SpectralParameter::polar(10.0, pi / 6);
    CHECK(epsilon_ordering_holds(lam, pi / 6, select_epsilon(pi / 6)));
}

TEST_CASE("domain construction validates its parameters")
{
    const SpectralParameter lam(4.0, 0.0);
    CHECK_THROWS(DomainSpec(DomainKind::D0, lam, 1.0));
    CHECK_THROWS(DomainSpec(DomainKind::D0, lam, pi / 6, pi / 6));
    CHECK_THROWS(DomainSpec(DomainKind::Dstar, lam, pi / 6));
    CHECK_THROWS(DomainSpec(DomainKind::Dplus, SpectralParameter::polar(4.0, pi), pi / 6));
    CHECK_NOTHROW(DomainSpec(DomainKind::Dminus, lam, pi / 6));
}

TEST_CASE("D_0 membership")
{
    const double d = pi / 6;
    const SpectralParameter lam = SpectralParameter::polar(4.0, pi / 4);
    const DomainSpec dom(DomainKind::D0, lam, d);
    CHECK(in_domain(dom, cplx(5.0, 0.0)));
    CHECK(in_domain(dom, std::polar(5.0, pi - d / 2)));
    CHECK_FALSE(in_domain(dom, std::polar(5.0, pi - d / 6)));
    CHECK_THROWS(in_domain(dom, cplx(0.0, 0.0)));
}

TEST_CASE("the disk around z_E is excluded")
{
    const double d = pi / 6;
    for (double a : {0.0, pi / 3, 2 * pi / 3}) {
        const SpectralParameter lam = SpectralParameter::polar(9.0, a);
        const DomainSpec dom(DomainKind::DZdelta, lam, d);
        const Disk disk = b_eps_disk(lam, dom.epsilon);
        CHECK_FALSE(in_domain(dom, z_E_point(lam)));
        CHECK_FALSE(in_domain(dom, disk.center + 0.5 * disk.radius * cplx(0.6, 0.8)));
        CHECK(in_domain(DomainSpec(DomainKind::DZ, lam, d), -z_E_point(lam)));
    }
}

TEST_CASE("choose_phi clamps into the admissible window")
{
    const double d = pi / 6;
    CHECK(choose_phi(std::polar(1.0, 0.2), d) == doctest::Approx(0.2));
    CHECK(choose_phi(std::polar(1.0, 2.0), d) == doctest::Approx(pi / 3 - d / 3));
    CHECK(choose_phi(std::polar(1.0, -2.0), d) == doctest::Approx(-pi / 3 + d / 3));
    CHECK_THROWS(choose_phi(std::polar(1.0, pi - 0.01), d));
}

TEST_CASE("Upsilon nodes stay on their level curve")
{
    for (cplx z : {cplx(2.0, 1.0), std::polar(3.0, 1.9), std::polar(1.5, -1.2)}) {
        const double phi = choose_phi(z, pi / 6);
        const UpsilonContour c = upsilon_contour(z, phi, 40.0, 200);
        CHECK(std::abs(c.point(c.x0) - z) < 1e-12 * std::abs(z));
        for (const cplx& s : c.nodes) CHECK(std::pow(s * std::polar(1.0, -phi), 1.5).imag() == doctest::Approx(c.y).epsilon(1e-10).scale(1.0));
    }
}
