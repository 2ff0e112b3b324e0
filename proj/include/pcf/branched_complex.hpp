#ifndef PCF_BRANCHED_COMPLEX_HPP
#define PCF_BRANCHED_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace pcf {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/** \brief Side of the negative real axis for values lying exactly on a cut. */
enum class CutSide { lower, upper };

/** \brief Complex number stored as modulus and an argument on the universal cover. */
struct BranchedComplex {
    double modulus = 0.0;
    double arg = 0.0;

    BranchedComplex() = default;
    BranchedComplex(double m, double a) : modulus(m), arg(m == 0.0 ? 0.0 : a)
    {
        if (!(m >= 0.0) || !std::isfinite(m) || !std::isfinite(a))
            fail(ErrorKind::domain, "BranchedComplex requires finite modulus >= 0 and finite argument");
    }

    /** \brief Principal lift: arg in (-pi, pi], with the lower cut side mapped to -pi. */
    static BranchedComplex from_principal(cplx z, CutSide side = CutSide::upper)
    {
        double a = std::arg(z);
        if (z.imag() == 0.0 && z.real() < 0.0) a = side == CutSide::lower ? -pi : pi;
        return {std::abs(z), a};
    }

    cplx value() const { return std::polar(modulus, arg); }

    BranchedComplex operator*(const BranchedComplex& o) const { return {modulus * o.modulus, arg + o.arg}; }
    BranchedComplex operator/(const BranchedComplex& o) const
    {
        if (o.modulus == 0.0) fail(ErrorKind::domain, "division by zero BranchedComplex");
        return {modulus / o.modulus, arg - o.arg};
    }
};

/** \brief w^p evaluated on the sheet carried by w. */
inline BranchedComplex pow_branched(const BranchedComplex& w, double p)
{
    if (w.modulus == 0.0) {
        if (p < 0.0) fail(ErrorKind::domain, "zero raised to a negative power");
        return {p == 0.0 ? 1.0 : 0.0, 0.0};
    }
    return {std::pow(w.modulus, p), p * w.arg};
}

/** \brief Principal argument with an explicit choice of side on the negative axis. */
inline double arg_side(cplx z, CutSide side)
{
    if (z.imag() == 0.0 && z.real() < 0.0) return side == CutSide::lower ? -pi : pi;
    return std::arg(z);
}

/** \brief Lifts a sampled path to the universal cover starting from \p seed_arg. */
inline std::vector<BranchedComplex> continue_arg(const std::vector<cplx>& path, double seed_arg)
{
    std::vector<BranchedComplex> out;
    out.reserve(path.size());
    if (path.empty()) return out;
    if (path[0] == 0.0) fail(ErrorKind::domain, "continue_arg path passes through 0");
    // The seed must be a representative of the first sample's argument.
    double a = std::arg(path[0]);
    a += 2.0 * pi * std::round((seed_arg - a) / (2.0 * pi));
    out.emplace_back(std::abs(path[0]), a);
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (path[i] == 0.0) fail(ErrorKind::domain, "continue_arg path passes through 0");
        double d = std::arg(path[i] / path[i - 1]);
        if (std::abs(d) >= pi) fail(ErrorKind::resolution, "argument step of pi or more; refine the path");
        a += d;
        out.emplace_back(std::abs(path[i]), a);
    }
    return out;
}

/** \brief Closed or half-open sector S[alpha, beta] in argument space. */
struct Sector {
    double alpha = -pi;
    double beta = pi;
    bool closed_alpha = true;
    bool closed_beta = true;

    Sector() = default;
    Sector(double a, double b, bool ca = true, bool cb = true) : alpha(a), beta(b), closed_alpha(ca), closed_beta(cb)
    {
        if (!(a <= b) || b - a > 2.0 * pi + 1e-15) fail(ErrorKind::domain, "sector requires alpha <= beta <= alpha + 2pi");
    }

    bool contains_arg(double a, double tol) const
    {
        bool lo = closed_alpha ? a >= alpha - tol : a > alpha - tol;
        bool hi = closed_beta ? a <= beta + tol : a < beta + tol;
        return lo && hi;
    }
};

/**
 * \brief Membership of a plane point in a sector.
 *
 * The representatives arg z and arg z +- 2pi are all tried, so sectors reaching
 * past [-pi, pi] (for instance S[-pi - d, -pi/3]) behave as sets in the plane.
 */
inline bool sector_contains(const Sector& s, cplx z, double tol = 1e-12)
{
    if (z == 0.0) fail(ErrorKind::domain, "sector membership of 0");
    double a = std::arg(z);
    return s.contains_arg(a, tol) || s.contains_arg(a + 2.0 * pi, tol) || s.contains_arg(a - 2.0 * pi, tol);
}

/** \brief Membership using the carried argument only; distinguishes the two sides of a cut. */
inline bool sector_contains(const Sector& s, const BranchedComplex& w, double tol = 1e-12)
{
    if (w.modulus == 0.0) fail(ErrorKind::domain, "sector membership of 0");
    return s.contains_arg(w.arg, tol);
}

} // namespace pcf

#endif
