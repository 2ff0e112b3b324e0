#ifndef PCF_DOMAINS_HPP
#define PCF_DOMAINS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "quasiclassical.hpp"

namespace pcf {

enum class DomainKind { DZ, DZdelta, H_plus, H_minus, D0, Dplus, Dminus, Dstar };

inline const char* domain_kind_name(DomainKind k)
{
    switch (k) {
    case DomainKind::DZ: return "DZ";
    case DomainKind::DZdelta: return "DZdelta";
    case DomainKind::H_plus: return "H_plus";
    case DomainKind::H_minus: return "H_minus";
    case DomainKind::D0: return "D0";
    case DomainKind::Dplus: return "Dplus";
    case DomainKind::Dminus: return "Dminus";
    case DomainKind::Dstar: return "Dstar";
    }
    return "?";
}

inline cplx z_E_point(const SpectralParameter& lam) { return z_E_branched(lam).value(); }

struct Disk {
    cplx center;
    double radius;
};

/** \brief B_eps(lambda): centre z_E, radius |z_E| sin eps. */
inline Disk b_eps_disk(const SpectralParameter& lam, double eps)
{
    const cplx c = z_E_point(lam);
    return {c, std::abs(c) * std::sin(eps)};
}

namespace detail {

inline double wrap_pi(double a)
{
    a = std::remainder(a, 2.0 * pi);
    return a;
}

/** Rotation angle pi/3 -+ delta/3 used by H_{+-delta}. */
inline double h_rotation(int sign, double delta) { return pi / 3.0 - sign * delta / 3.0; }

/** Im (z e^{i beta})^{3/2} with the principal power. */
inline double level_principal(cplx z, double beta)
{
    const cplx w = z * std::polar(1.0, beta);
    const double a = std::arg(w);
    return std::pow(std::abs(w), 1.5) * std::sin(1.5 * a);
}

inline bool lambda_admits(int sign, const SpectralParameter& lam, double delta, double tol = 1e-14)
{
    return sign > 0 ? lam.arg() >= delta - tol : lam.arg() <= pi - delta + tol;
}

} // namespace detail

/**
 * \brief Tangency point w_{+-delta}(lambda): maximiser of Im(z e^{i(pi/3 -+ delta/3)})^{3/2} over B_eps.
 *
 * The maximum of a harmonic function sits on the boundary circle; a 720-point
 * scan is refined by Brent's method. Ties go to the smallest angle.
 */
inline cplx w_tangent(const SpectralParameter& lam, int sign, double delta, double eps)
{
    if (sign != 1 && sign != -1) fail(ErrorKind::usage, "w_tangent sign must be +1 or -1");
    if (!detail::lambda_admits(sign, lam, delta)) fail(ErrorKind::domain, "w_tangent: lambda outside the sector where w is defined");
    const Disk d = b_eps_disk(lam, eps);
    const double beta = detail::h_rotation(sign, delta);
    auto f = [&](double a) { return detail::level_principal(d.center + std::polar(d.radius, a), beta); };
    constexpr int n = 720;
    int best = 0;
    double fbest = f(0.0);
    for (int i = 1; i < n; ++i) {
        const double v = f(2.0 * pi * i / n);
        if (v > fbest) {
            fbest = v;
            best = i;
        }
    }
    const double h = 2.0 * pi / n;
    const double a0 = best * h;
    auto r = boost::math::tools::brent_find_minima([&](double a) { return -f(a); }, a0 - h, a0 + h, 52);
    const double a = -r.second >= fbest ? r.first : a0;
    return d.center + std::polar(d.radius, a);
}

/** \brief The level value Im(w_{+-delta} e^{i(pi/3 -+ delta/3)})^{3/2}. */
inline double h_level(const SpectralParameter& lam, int sign, double delta, double eps)
{
    return detail::level_principal(w_tangent(lam, sign, delta, eps), detail::h_rotation(sign, delta));
}

/** \brief Checks Im(w_delta e^{i(pi/3-delta/3)})^{3/2} <= Im(z_0 e^{i(pi/3-delta/3)})^{3/2}. */
inline bool epsilon_ordering_holds(const SpectralParameter& lam, double delta, double eps)
{
    if (!detail::lambda_admits(+1, lam, delta)) return true;
    const cplx z0 = z_of_x(0.0, lam);
    const double beta = detail::h_rotation(+1, delta);
    return h_level(lam, +1, delta, eps) <= detail::level_principal(z0, beta);
}

/**
 * \brief Default eps: delta/6, halved until the ordering condition holds on a probe grid.
 *
 * All quantities scale as |lambda|^{2/3} in z, so only arg lambda is probed.
 */
inline double select_epsilon(double delta)
{
    if (!(delta > 0.0 && delta < pi / 5.0)) fail(ErrorKind::domain, "delta must lie in (0, pi/5)");
    double eps = delta / 6.0;
    for (int it = 0; it < 40; ++it) {
        bool ok = true;
        for (int k = 0; k <= 24 && ok; ++k) {
            const double a = delta + (pi - delta) * k / 24.0;
            ok = epsilon_ordering_holds(SpectralParameter::polar(1.0, a), delta, eps);
        }
        if (ok) return eps;
        eps *= 0.5;
    }
    fail(ErrorKind::convergence, "no admissible eps found");
}

/** \brief A domain of the z-plane tied to lambda, delta and eps. */
struct DomainSpec {
    DomainKind kind = DomainKind::DZdelta;
    SpectralParameter lambda;
    double delta = pi / 6.0;
    double epsilon = pi / 36.0;

    DomainSpec() = default;
    DomainSpec(DomainKind k, SpectralParameter lam, double d, std::optional<double> eps = std::nullopt)
        : kind(k), lambda(lam), delta(d), epsilon(eps ? *eps : select_epsilon(d))
    {
        if (!(delta > 0.0 && delta < pi / 5.0)) fail(ErrorKind::domain, "delta must lie in (0, pi/5)");
        if (!(epsilon > 0.0 && epsilon < delta / 3.0)) fail(ErrorKind::domain, "epsilon must lie in (0, delta/3)");
        if (!epsilon_ordering_holds(lambda, delta, epsilon)) fail(ErrorKind::domain, "epsilon too large: w_delta ordering violated");
        const double a = lambda.arg();
        if ((kind == DomainKind::Dplus || kind == DomainKind::H_minus) && a > pi - delta + 1e-14)
            fail(ErrorKind::domain, "domain requires arg lambda <= pi - delta");
        if ((kind == DomainKind::Dstar || kind == DomainKind::H_plus) && a < delta - 1e-14)
            fail(ErrorKind::domain, "domain requires arg lambda >= delta");
        if (kind == DomainKind::H_plus) w_plus = w_tangent(lambda, +1, delta, epsilon);
        if (kind == DomainKind::H_minus) w_minus = w_tangent(lambda, -1, delta, epsilon);
        if (kind == DomainKind::Dplus) w_minus = w_tangent(lambda, -1, delta, epsilon);
        if (kind == DomainKind::Dstar) w_plus = w_tangent(lambda, +1, delta, epsilon);
    }

    std::optional<cplx> w_plus, w_minus;
};

namespace detail {

inline bool in_DZ(cplx z, const SpectralParameter& lam, double tol)
{
    const cplx ze = z_E_point(lam);
    const double da = std::abs(wrap_pi(std::arg(z) - std::arg(ze)));
    return !(da <= tol && std::abs(z) >= std::abs(ze) * (1.0 - tol));
}

inline bool in_DZdelta(cplx z, const SpectralParameter& lam, double eps, double tol)
{
    const Disk d = b_eps_disk(lam, eps);
    if (std::abs(z - d.center) <= d.radius * (1.0 + tol)) return false;
    const double da = std::abs(wrap_pi(std::arg(z) - std::arg(d.center)));
    if (da <= eps + tol && std::abs(z) >= std::abs(d.center) * std::cos(eps) * (1.0 - tol)) return false;
    return true;
}

/** Sector test that tolerates an empty sector (alpha > beta) by returning false. */
inline bool in_sector(double alpha, double beta, cplx z, double tol)
{
    if (alpha > beta) return false;
    return sector_contains(Sector(alpha, beta), z, tol);
}

inline bool in_H(cplx z, int sign, double delta, cplx w, double tol)
{
    const double lo = -pi + sign * delta / 3.0, hi = -pi / 3.0 + sign * delta / 3.0;
    if (!in_sector(lo, hi, z, tol)) return false;
    // representative of arg z inside the sector
    double a = std::arg(z);
    if (a > hi + tol) a -= 2.0 * pi;
    if (a < lo - tol) a += 2.0 * pi;
    const double beta = h_rotation(sign, delta);
    const double lz = std::pow(std::abs(z), 1.5) * std::sin(1.5 * (a + beta));
    const double lw = level_principal(w, beta);
    return lz >= lw - tol * (1.0 + std::abs(lw));
}

} // namespace detail

/** \brief Set membership of z in the domain described by \p spec. */
inline bool in_domain(const DomainSpec& spec, cplx z, double tol = 1e-12)
{
    if (z == 0.0) fail(ErrorKind::domain, "domain membership of 0");
    const SpectralParameter& lam = spec.lambda;
    const double d = spec.delta, th = lam.theta;
    if (spec.kind == DomainKind::DZ) return detail::in_DZ(z, lam, tol);
    if (spec.kind == DomainKind::H_plus) return detail::in_H(z, +1, d, *spec.w_plus, tol);
    if (spec.kind == DomainKind::H_minus) return detail::in_H(z, -1, d, *spec.w_minus, tol);
    if (!detail::in_DZdelta(z, lam, spec.epsilon, tol)) return false;
    switch (spec.kind) {
    case DomainKind::DZdelta: return true;
    case DomainKind::D0: return detail::in_sector(-pi + d / 3.0, pi - d / 3.0, z, tol);
    case DomainKind::Dplus:
        return detail::in_sector(pi / 3.0 + 4.0 * th / 3.0 + d / 3.0, pi - d / 3.0, z, tol) || detail::in_H(z, -1, d, *spec.w_minus, tol)
            || detail::in_sector(-pi + 4.0 * th / 3.0, pi / 3.0 - d / 3.0, z, tol);
    case DomainKind::Dminus: return std::abs(detail::wrap_pi(pi / 3.0 - std::arg(z))) >= d / 3.0 - tol;
    case DomainKind::Dstar:
        return detail::in_sector(pi / 3.0 + d / 3.0, pi + 4.0 * th / 3.0, z, tol) || detail::in_H(z, +1, d, *spec.w_plus, tol)
            || detail::in_sector(-pi / 3.0 + d / 3.0, -pi / 3.0 + d / 3.0 + 4.0 * th / 3.0, z, tol);
    default: break;
    }
    return false;
}

// ---------------------------------------------------------------- Upsilon_phi(z)

/** \brief Discretised level curve Im(s e^{-i phi})^{3/2} = Im(z e^{-i phi})^{3/2}. */
struct UpsilonContour {
    cplx z;
    double phi = 0.0;
    double x0 = 0.0;  ///< Re (z e^{-i phi})^{3/2}
    double y = 0.0;   ///< Im (z e^{-i phi})^{3/2}, sign carried on zero
    double T = 0.0;
    bool degenerate = false;
    std::vector<double> params;
    std::vector<cplx> nodes;
    std::vector<double> weights;

    /** s(t) = e^{i phi} (t + i y)^{2/3}. */
    cplx point(double t) const
    {
        const double a = std::atan2(y, t);
        return std::polar(std::pow(std::hypot(t, y), 2.0 / 3.0), phi + (2.0 / 3.0) * a);
    }
    /** ds/dt = (2/3) e^{i phi} (t + i y)^{-1/3}. */
    cplx tangent(double t) const
    {
        const double a = std::atan2(y, t);
        return (2.0 / 3.0) * std::polar(std::pow(std::hypot(t, y), -1.0 / 3.0), phi - a / 3.0);
    }
    /** s^{3/2} = e^{3 i phi / 2} (t + i y) on the sheet continuous from the anchor. */
    cplx s32(double t) const { return std::polar(1.0, 1.5 * phi) * cplx(t, y); }
};

/** \brief Default Upsilon direction: clamp(arg z, -pi/3 + delta/3, pi/3 - delta/3). */
inline double choose_phi(cplx z, double delta)
{
    const double a = std::arg(z);
    if (std::abs(a) > pi - 2.0 * delta / 3.0 + 1e-14) fail(ErrorKind::domain, "choose_phi needs |arg z| <= pi - 2 delta / 3");
    return std::clamp(a, -pi / 3.0 + delta / 3.0, pi / 3.0 - delta / 3.0);
}

namespace detail {

inline UpsilonContour upsilon_frame(cplx z, double phi)
{
    if (z == 0.0) fail(ErrorKind::domain, "Upsilon anchor at 0");
    if (std::abs(phi) > pi / 3.0 + 1e-14) fail(ErrorKind::domain, "Upsilon needs |phi| <= pi/3");
    const double rel = wrap_pi(std::arg(z) - phi);
    if (std::abs(rel) > 2.0 * pi / 3.0 + 1e-12) fail(ErrorKind::domain, "Upsilon needs |arg z - phi| <= 2pi/3");
    UpsilonContour c;
    c.z = z;
    c.phi = phi;
    const double m = std::pow(std::abs(z), 1.5);
    c.x0 = m * std::cos(1.5 * rel);
    c.y = m * std::sin(1.5 * rel);
    if (std::abs(std::abs(rel) - 2.0 * pi / 3.0) <= 1e-12) {
        c.degenerate = true;
        c.y = rel > 0 ? 0.0 : -0.0;
        c.x0 = -m;
    }
    return c;
}

} // namespace detail

/**
 * \brief Upsilon_phi(z) on t in [x0, x0 + T], graded towards the anchor.
 *
 * In the degenerate case the curve runs through 0; the node at t = 0 is
 * dropped and the curve is split there.
 */
inline UpsilonContour upsilon_contour(cplx z, double phi, double T, int n)
{
    if (n < 4 || !(T > 0.0)) fail(ErrorKind::usage, "upsilon_contour needs n >= 4 and T > 0");
    UpsilonContour c = detail::upsilon_frame(z, phi);
    c.T = T;
    for (int i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) / (n - 1);
        const double t = c.x0 + T * u * u;
        if (c.degenerate && std::abs(t) < 1e-14 * (1.0 + T)) continue;
        c.params.push_back(t);
    }
    const std::size_t m = c.params.size();
    c.nodes.resize(m);
    c.weights.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) c.nodes[i] = c.point(c.params[i]);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double h = c.params[i + 1] - c.params[i];
        c.weights[i] += 0.5 * h * std::abs(c.tangent(c.params[i]));
        c.weights[i + 1] += 0.5 * h * std::abs(c.tangent(c.params[i + 1]));
    }
    return c;
}

/** \brief Parameter length after which |e^{-4/3 s^{3/2}}| has dropped by \p rel relative to the anchor. */
inline double upsilon_truncation(double phi, double rel = 1e-16)
{
    const double c = std::cos(1.5 * phi);
    if (c <= 1e-12) fail(ErrorKind::domain, "no exponential decay along Upsilon for |phi| = pi/3");
    return -std::log(rel) / ((4.0 / 3.0) * c);
}

enum class UpsilonIntegralKind { exp_decay, power };

/**
 * \brief Arc-length integral along Upsilon_phi(z) to infinity.
 *
 * exp_decay is normalised by |e^{-4/3 z^{3/2}}|.
 */
inline double upsilon_integral(cplx z, double phi, double alpha, UpsilonIntegralKind kind)
{
    const UpsilonContour c = detail::upsilon_frame(z, phi);
    const cplx ref = c.s32(c.x0);
    auto f = [&](double t) -> double {
        if (t == 0.0 && c.y == 0.0) return 0.0;
        const double ds = (2.0 / 3.0) * std::pow(std::hypot(t, c.y), -1.0 / 3.0);
        const double as = std::pow(std::hypot(t, c.y), 2.0 / 3.0);
        const double w = 1.0 / std::pow(1.0 + as, alpha);
        if (kind == UpsilonIntegralKind::power) return ds * w;
        return ds * w * std::exp(-(4.0 / 3.0) * (c.s32(t) - ref).real());
    };
    std::vector<double> cuts{c.x0};
    if (c.x0 < 0.0) cuts.push_back(0.0);
    const double scale = std::max(1.0, std::abs(c.x0));
    for (double k : {1.0, 4.0, 16.0})
        if (c.x0 + k * scale > cuts.back()) cuts.push_back(c.x0 + k * scale);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, cuts[i], cuts[i + 1], 15, 1e-11);
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, cuts.back(), std::numeric_limits<double>::infinity(), 15, 1e-11);
    return total;
}

} // namespace pcf

#endif
