#ifndef PCF_SPECTRAL_PARAMETER_HPP
#define PCF_SPECTRAL_PARAMETER_HPP

#include <cmath>

#include "branched_complex.hpp"

namespace pcf {

/** \brief Spectral parameter lambda = |lambda| e^{2 i theta} with theta in [0, pi/2]. */
struct SpectralParameter {
    double modulus = 1.0;
    double theta = 0.0;

    SpectralParameter() = default;
    SpectralParameter(double m, double th) : modulus(m), theta(th)
    {
        if (!(m > 0.0) || !std::isfinite(m)) fail(ErrorKind::domain, "spectral parameter modulus must be positive");
        if (!(th >= 0.0 && th <= pi / 2)) fail(ErrorKind::domain, "spectral parameter theta must lie in [0, pi/2]");
    }

    /** \brief From a complex value with Im >= 0 (a negative real value gets theta = pi/2). */
    static SpectralParameter from_complex(cplx lam)
    {
        if (lam.imag() < 0.0) fail(ErrorKind::domain, "lambda must satisfy Im lambda >= 0 (use conjugation)");
        double a = lam.imag() == 0.0 && lam.real() < 0.0 ? pi : std::arg(lam);
        return {std::abs(lam), 0.5 * a};
    }

    /** \brief From modulus and arg lambda in [0, pi]. */
    static SpectralParameter polar(double m, double arg_lambda) { return {m, 0.5 * arg_lambda}; }

    double arg() const { return 2.0 * theta; }
    cplx value() const { return theta == 0.0 ? cplx(modulus, 0.0) : std::polar(modulus, 2.0 * theta); }
    bool valid() const { return modulus >= 0.5; }

    /** \brief sqrt(lambda) = |lambda|^{1/2} e^{i theta}. */
    cplx sqrt() const { return std::polar(std::sqrt(modulus), theta); }
    /** \brief lambda^{2/3} on the principal branch. */
    BranchedComplex pow23() const { return {std::cbrt(modulus * modulus), 4.0 * theta / 3.0}; }
};

} // namespace pcf

#endif
