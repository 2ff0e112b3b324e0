#include <doctest.h>

#include "pcf/spectral_parameter.hpp"
#include "test_util.hpp"

using namespace pcf;

TEST_CASE("principal lift picks the requested cut side")
{
    CHECK(BranchedComplex::from_principal(cplx(-2.0, 0.0), CutSide::lower).arg == doctest::Approx(-pi));
    CHECK(BranchedComplex::from_principal(cplx(-2.0, 0.0), CutSide::upper).arg == doctest::Approx(pi));
    CHECK(BranchedComplex::from_principal(cplx(0.0, 3.0)).arg == doctest::Approx(pi / 2));
}

TEST_CASE("products add arguments without wrapping")
{
    const BranchedComplex a{2.0, 3.0}, b{0.5, 2.5};
    const BranchedComplex p = a * b;
    CHECK(p.modulus == doctest::Approx(1.0));
    CHECK(p.arg == doctest::Approx(5.5));
    CHECK((p / b).arg == doctest::Approx(3.0));
    CHECK_THROWS(a / BranchedComplex{0.0, 0.0});
}

TEST_CASE("fractional powers round trip on the carried sheet")
{
    for (double arg : {-2.5, -1.0, 0.3, 2.9, 4.0}) {
        const BranchedComplex w{1.7, arg};
        const BranchedComplex back = pow_branched(pow_branched(w, 2.0 / 3.0), 1.5);
        CHECK(back.arg == doctest::Approx(arg));
        CHECK(test::rel_err(back.value(), w.value()) < 1e-14);
    }
}

TEST_CASE("argument continuation along a loop gains 2 pi")
{
    std::vector<cplx> path;
    for (int k = 0; k <= 64; ++k) path.push_back(std::polar(1.0, 2.0 * pi * k / 64.0));
    const auto lifted = continue_arg(path, 0.0);
    REQUIRE(lifted.size() == path.size());
    CHECK(lifted.back().arg == doctest::Approx(2.0 * pi));
    for (std::size_t k = 1; k < lifted.size(); ++k) CHECK(lifted[k].arg > lifted[k - 1].arg);
}

TEST_CASE("sector membership: plane sets versus carried arguments")
{
    const Sector s(pi, 2.0 * pi);
    CHECK(sector_contains(s, cplx(0.0, -1.0)));
    CHECK_FALSE(sector_contains(s, BranchedComplex{1.0, -pi / 2}));
    CHECK(sector_contains(s, BranchedComplex{1.0, 3 * pi / 2}));
    const Sector open(0.0, pi / 2, false, true);
    CHECK_FALSE(sector_contains(open, BranchedComplex{1.0, -1e-3}));
    CHECK_THROWS(sector_contains(s, cplx(0.0, 0.0)));
    CHECK_THROWS(Sector(1.0, 0.0));
}

TEST_CASE("spectral parameter roots and validation")
{
    const SpectralParameter lam = SpectralParameter::polar(4.0, 3 * pi / 4);
    CHECK(test::rel_err(lam.sqrt() * lam.sqrt(), lam.value()) < 1e-15);
    const cplx p = lam.pow23().value();
    CHECK(test::rel_err(std::pow(p, 1.5), lam.value()) < 1e-14);
    CHECK(SpectralParameter::from_complex(cplx(-3.0, 0.0)).theta == doctest::Approx(pi / 2));
    CHECK_THROWS(SpectralParameter(1.0, 2.0));
    CHECK_THROWS(SpectralParameter(0.0, 0.1));
    CHECK_THROWS(SpectralParameter::from_complex(cplx(1.0, -1.0)));
    CHECK_FALSE(SpectralParameter(0.25, 0.0).valid());
}
