#ifndef PCF_SPECFUN_HPP
#define PCF_SPECFUN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "branched_complex.hpp"
#include "spectral_parameter.hpp"

namespace pcf {

inline const cplx omega = std::polar(1.0, 2.0 * pi / 3.0);
inline const cplx omega_bar = std::polar(1.0, -2.0 * pi / 3.0);

struct AiryValue {
    cplx ai;
    cplx ai_prime;
};

namespace detail {

inline constexpr double airy_ai0 = 0.355028053887817239260063186004;
inline constexpr double airy_aip0 = -0.258819403792806798405183560189;
inline constexpr double airy_series_radius = 1.5;
inline constexpr double airy_asym_radius = 12.0;

/** Maclaurin series; used for |z| <= 1.5. */
inline AiryValue airy_maclaurin(cplx z)
{
    const cplx z3 = z * z * z;
    cplx f = 1.0, fp = 0.0, g = z, gp = 1.0;
    cplx tf = 1.0, tg = z, tfp = z * z / 2.0, tgp = 1.0;
    fp = tfp;
    for (int k = 1; k < 60; ++k) {
        const double dk = 3.0 * k;
        tf *= z3 / ((dk - 1.0) * dk);
        tg *= z3 / (dk * (dk + 1.0));
        tgp *= z3 / ((dk - 2.0) * dk);
        if (k > 1) tfp *= z3 / ((dk - 3.0) * (dk - 1.0));
        f += tf;
        g += tg;
        gp += tgp;
        if (k > 1) fp += tfp;
        if (std::abs(tf) + std::abs(tg) + std::abs(tfp) + std::abs(tgp) < 1e-18) break;
    }
    return {airy_ai0 * f + airy_aip0 * g, airy_ai0 * fp + airy_aip0 * gp};
}

/**
 * Scaled asymptotic expansion for |arg z| <= 2pi/3: returns Ai and Ai' times
 * exp(2/3 z^{3/2}) with the principal power, summed to the smallest term.
 */
inline AiryValue airy_asymptotic_scaled(cplx z)
{
    const cplx sz = std::sqrt(z);
    const cplx zeta = (2.0 / 3.0) * z * sz;
    const cplx z14 = std::sqrt(sz);
    const cplx inv = -1.0 / zeta;
    cplx su = 1.0, sv = 1.0, pw = 1.0;
    double u = 1.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        const double v = -u * (6.0 * k + 1.0) / (6.0 * k - 1.0);
        pw *= inv;
        const double mag = std::abs(u * pw);
        if (mag > last) break;
        su += u * pw;
        sv += v * pw;
        last = mag;
        if (mag < 1e-18) break;
    }
    const double c = 0.5 / std::sqrt(pi);
    return {c * su / z14, -c * z14 * sv};
}

/** Taylor-series step of u'' = z u from z0 to z0 + h. */
inline void airy_taylor_step(cplx z0, cplx h, cplx& u, cplx& up)
{
    // d_k = c_k h^k with (k+2)(k+1) c_{k+2} = z0 c_k + c_{k-1}
    std::array<cplx, 4> d{u, up * h, 0.0, 0.0};
    const cplx h2 = h * h, h3 = h2 * h;
    cplx su = d[0] + d[1], sp = d[1];
    cplx dkm1 = 0.0, dk = d[0], dk1 = d[1];
    double scale = std::abs(u) + std::abs(up * h) + 1e-300;
    int quiet = 0;
    for (int k = 0; k < 200; ++k) {
        const cplx dk2 = (z0 * h2 * dk + h3 * dkm1) / ((k + 2.0) * (k + 1.0));
        su += dk2;
        sp += (k + 2.0) * dk2;
        quiet = std::abs(dk2) * (k + 2.0) < 1e-18 * scale ? quiet + 1 : 0;
        if (quiet >= 3) break;
        dkm1 = dk;
        dk = dk1;
        dk1 = dk2;
    }
    u = su;
    up = sp / h;
}

/** Integrates u'' = z u along the straight segment a -> b. */
inline void airy_integrate(cplx a, cplx b, cplx& u, cplx& up)
{
    const double len = std::abs(b - a);
    if (len == 0.0) return;
    const double rmax = std::max(std::abs(a), std::abs(b));
    const double hmax = std::min(0.5, 1.5 / std::sqrt(rmax + 1.0));
    const int n = std::max(1, static_cast<int>(std::ceil(len / hmax)));
    const cplx h = (b - a) / static_cast<double>(n);
    for (int i = 0; i < n; ++i) airy_taylor_step(a + static_cast<double>(i) * h, h, u, up);
}

inline AiryValue airy_unscaled_moderate(cplx z)
{
    const double r = std::abs(z);
    if (r <= airy_series_radius) return airy_maclaurin(z);
    const cplx dir = z / r;
    if (std::abs(std::arg(z)) <= pi / 3.0) {
        // Recessive sector: integrate inward from the asymptotic seed.
        const cplx z1 = dir * airy_asym_radius;
        AiryValue s = airy_asymptotic_scaled(z1);
        const cplx e = std::exp(-(2.0 / 3.0) * z1 * std::sqrt(z1));
        cplx u = s.ai * e, up = s.ai_prime * e;
        airy_integrate(z1, z, u, up);
        return {u, up};
    }
    const cplx z0 = dir * airy_series_radius;
    AiryValue s = airy_maclaurin(z0);
    airy_integrate(z0, z, s.ai, s.ai_prime);
    return s;
}

} // namespace detail

/**
 * \brief Ai(z) exp(2/3 z^{3/2}) and Ai'(z) exp(2/3 z^{3/2}), principal power.
 *
 * Stays finite for large |z| in every direction.
 */
inline AiryValue airy_scaled(cplx z)
{
    using namespace detail;
    const double r = std::abs(z);
    const cplx sz = std::sqrt(z);
    const cplx zeta = (2.0 / 3.0) * z * sz;
    if (r < airy_asym_radius) {
        AiryValue v = airy_unscaled_moderate(z);
        const cplx e = std::exp(zeta);
        return {v.ai * e, v.ai_prime * e};
    }
    const double th = std::arg(z);
    if (std::abs(th) <= 2.0 * pi / 3.0) return airy_asymptotic_scaled(z);
    // Reduce through Ai(z) = e^{-i pi/3} Ai(z w) + e^{i pi/3} Ai(z wbar); on this
    // sector the rotated 3/2 powers equal +-zeta exactly.
    const AiryValue p = airy_asymptotic_scaled(z * omega);
    const AiryValue m = airy_asymptotic_scaled(z * omega_bar);
    const cplx cm = std::polar(1.0, -pi / 3.0), cp = std::polar(1.0, pi / 3.0);
    const cplx e2 = std::exp(2.0 * zeta);
    const cplx fp = th > 0 ? 1.0 : e2;
    const cplx fm = th > 0 ? e2 : 1.0;
    return {cm * p.ai * fp + cp * m.ai * fm, cp * p.ai_prime * fp + cm * m.ai_prime * fm};
}

/** \brief Ai(z) and Ai'(z). */
inline AiryValue airy(cplx z)
{
    if (std::abs(z) < detail::airy_asym_radius) return detail::airy_unscaled_moderate(z);
    const AiryValue s = airy_scaled(z);
    const cplx e = std::exp(-(2.0 / 3.0) * z * std::sqrt(z));
    return {s.ai * e, s.ai_prime * e};
}

/** \brief Bi(z) = i(2 e^{-i pi/3} Ai(omega z) - Ai(z)) and its derivative. */
inline AiryValue airy_bi(cplx z)
{
    const AiryValue a = airy(z);
    const AiryValue b = airy(omega * z);
    const cplx i(0.0, 1.0);
    const cplx c = 2.0 * std::polar(1.0, -pi / 3.0);
    return {i * (c * b.ai - a.ai), i * (c * omega * b.ai_prime - a.ai_prime)};
}

// ---------------------------------------------------------------- Gamma

namespace detail {

inline cplx lgamma_stirling(cplx w)
{
    // Bernoulli numbers B_2 .. B_20
    static constexpr std::array<double, 10> b2k{1.0 / 6,      -1.0 / 30,      1.0 / 42,   -1.0 / 30,
                                                5.0 / 66,     -691.0 / 2730,  7.0 / 6,    -3617.0 / 510,
                                                43867.0 / 798, -174611.0 / 330};
    cplx s = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi);
    const cplx iw2 = 1.0 / (w * w);
    cplx p = 1.0 / w;
    for (int k = 1; k <= 10; ++k) {
        s += b2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= iw2;
    }
    return s;
}

inline bool is_gamma_pole(cplx w) { return w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::round(w.real()); }

} // namespace detail

/** \brief A logarithm of Gamma(w) (not necessarily the principal branch of log Gamma). */
inline cplx lgamma_complex(cplx w)
{
    if (detail::is_gamma_pole(w)) fail(ErrorKind::pole, "Gamma has a pole at a nonpositive integer");
    if (w.real() < 0.5) {
        // Gamma(w) Gamma(1-w) = pi / sin(pi w)
        return std::log(pi) - std::log(std::sin(pi * w)) - lgamma_complex(1.0 - w);
    }
    cplx prod = 1.0;
    cplx v = w;
    while (v.real() < 10.0) {
        prod *= v;
        v += 1.0;
    }
    return detail::lgamma_stirling(v) - std::log(prod);
}

/** \brief Gamma(w) for complex w. */
inline cplx gamma_complex(cplx w)
{
    if (detail::is_gamma_pole(w)) fail(ErrorKind::pole, "Gamma has a pole at a nonpositive integer");
    if (w.real() < 0.5) return pi / (std::sin(pi * w) * gamma_complex(1.0 - w));
    return std::exp(lgamma_complex(w));
}

// ---------------------------------------------------------------- psi oracle

/**
 * \brief A solution of y'' = (w^2 - mu) y in log-scaled form.
 *
 * The value is exp(log_scale) * y and the derivative exp(log_scale) * dy.
 */
struct ScaledSolution {
    cplx log_scale;
    cplx y;
    cplx dy;
    cplx value() const { return std::exp(log_scale) * y; }
    cplx derivative() const { return std::exp(log_scale) * dy; }
};

struct PsiValue {
    cplx psi;
    cplx psi_prime;
    cplx x;
    cplx lambda;
};

namespace detail {

/** Taylor step for y'' = (w^2 - mu) y from c to c + h. */
inline void weber_taylor_step(cplx c, cplx h, cplx mu, cplx& y, cplx& dy)
{
    const cplx q0 = c * c - mu;
    const cplx h2 = h * h;
    const cplx a0 = h2 * q0, a1 = 2.0 * c * h2 * h, a2 = h2 * h2;
    cplx dkm2 = 0.0, dkm1 = 0.0, dk = y, dk1 = dy * h;
    cplx sy = dk + dk1, sd = dk1;
    const double scale = std::abs(y) + std::abs(dy * h) + 1e-300;
    int quiet = 0;
    for (int k = 0; k < 400; ++k) {
        const cplx dk2 = (a0 * dk + a1 * dkm1 + a2 * dkm2) / ((k + 2.0) * (k + 1.0));
        sy += dk2;
        sd += (k + 2.0) * dk2;
        quiet = std::abs(dk2) * (k + 2.0) < 1e-17 * scale ? quiet + 1 : 0;
        if (quiet >= 3) break;
        dkm2 = dkm1;
        dkm1 = dk;
        dk = dk1;
        dk1 = dk2;
    }
    y = sy;
    dy = sd / h;
}

inline void renormalize(ScaledSolution& s)
{
    const double m = std::max(std::abs(s.y), std::abs(s.dy));
    if (m == 0.0 || !std::isfinite(m)) fail(ErrorKind::convergence, "psi integrator lost the solution");
    s.log_scale += std::log(m);
    s.y /= m;
    s.dy /= m;
}

/** Integrates along the straight segment a -> b with steps bounded by the local scale. */
inline void weber_integrate(cplx a, cplx b, cplx mu, ScaledSolution& s)
{
    const double len = std::abs(b - a);
    if (len == 0.0) return;
    cplx pos = a;
    const cplx dir = (b - a) / len;
    double done = 0.0;
    int guard = 0;
    while (done < len) {
        const double q = std::abs(pos * pos - mu) + std::abs(pos) + 1.0;
        double h = std::min(0.5, 1.5 / std::sqrt(q));
        // shrink near the end of the segment to land exactly on b
        if (done + h > len) h = len - done;
        weber_taylor_step(pos, dir * h, mu, s.y, s.dy);
        renormalize(s);
        done += h;
        pos = a + dir * done;
        if (++guard > 2000000) fail(ErrorKind::convergence, "psi integrator step budget exhausted");
    }
}

/** Asymptotic seed of psi(w, mu) for large |w| with |arg w| < 3pi/4. */
inline ScaledSolution weber_seed(cplx w, cplx mu)
{
    const cplx p = 0.5 * (mu - 1.0);
    const cplx a = 0.5 * (1.0 - mu);
    const cplx iw2 = 1.0 / (w * w);
    cplx term = 1.0, s = 1.0, ds = 0.0;
    double last = 1.0;
    for (int k = 1; k < 500; ++k) {
        // c_k = (-1)^k (a)_{2k} / (k! 4^k)
        term *= -(a + 2.0 * k - 2.0) * (a + 2.0 * k - 1.0) / (4.0 * k) * iw2;
        const double mag = std::abs(term);
        if (mag > last && k > 1) break;
        s += term;
        ds += -2.0 * k * term / w;
        last = mag;
        if (mag < 1e-18 * std::abs(s)) break;
    }
    ScaledSolution out;
    out.log_scale = p * std::log(w * std::sqrt(2.0)) - 0.5 * w * w;
    out.y = s;
    out.dy = (p / w - w) * s + ds;
    renormalize(out);
    return out;
}

} // namespace detail

/** \brief Seed radius of the psi oracle for a given mu. */
inline double psi_seed_radius(cplx mu)
{
    const double m = std::abs(mu);
    return std::max({8.0, 3.0 * std::sqrt(m), 0.5 * m}) + 2.0;
}

/**
 * \brief psi(w, mu) = U(-mu/2, w sqrt 2) in log-scaled form, for complex w and mu.
 *
 * Seeded from the asymptotic series at a far point and integrated with
 * Taylor steps; paths run through the recessive direction first.
 */
inline ScaledSolution psi_scaled(cplx w, cplx mu)
{
    const double xfar = std::max(psi_seed_radius(mu), std::abs(w) + 2.0);
    const double aw = std::abs(w) == 0.0 ? 0.0 : std::arg(w);
    if (std::abs(aw) <= pi / 4.0 + 1e-15) {
        const cplx start = std::polar(xfar, aw);
        ScaledSolution s = detail::weber_seed(start, mu);
        detail::weber_integrate(start, w, mu, s);
        return s;
    }
    ScaledSolution s = detail::weber_seed(cplx(xfar, 0.0), mu);
    detail::weber_integrate(cplx(xfar, 0.0), 0.0, mu, s);
    detail::weber_integrate(0.0, w, mu, s);
    return s;
}

/** \brief psi and its derivative at complex w for complex mu. */
inline PsiValue psi_complex(cplx w, cplx mu)
{
    const ScaledSolution s = psi_scaled(w, mu);
    return {s.value(), s.derivative(), w, mu};
}

/** \brief psi(x, lambda) for real x. */
inline PsiValue psi(double x, const SpectralParameter& lambda)
{
    if (!lambda.valid()) fail(ErrorKind::domain, "|lambda| >= 1/2 required");
    return psi_complex(cplx(x, 0.0), lambda.value());
}

} // namespace pcf

#endif
