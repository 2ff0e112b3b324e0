#ifndef PCF_QUASICLASSICAL_HPP
#define PCF_QUASICLASSICAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "branched_complex.hpp"
#include "spectral_parameter.hpp"

namespace pcf {

/** \brief xi(t) = int_1^t sqrt(s^2-1) ds on the unwrapped sheet. */
struct XiValue {
    BranchedComplex value;
    cplx t;
    CutSide side = CutSide::lower;
    cplx principal() const { return value.value(); }
};

inline const double eta_0 = -std::cbrt(std::pow(3.0 * pi / 8.0, 2.0));
inline const double eta_E = -std::cbrt(std::pow(3.0 * pi / 4.0, 2.0));

namespace detail {

inline const double c_eta = std::cbrt(4.5);  // (3/sqrt 2)^{2/3}
inline const double c_eta13 = std::cbrt(3.0 / std::sqrt(2.0));

inline bool on_real_axis(cplx t) { return t.imag() == 0.0; }

/** Place a point lying on the real axis on the requested side of it. */
inline cplx sided(cplx t, CutSide side)
{
    if (!on_real_axis(t)) return t;
    return {t.real(), side == CutSide::lower ? -0.0 : 0.0};
}

struct HSeries {
    cplx h, dh, d2h;
};

/** H(u) = int_0^1 tau^{1/2} (1 + u tau / 2)^{1/2} d tau and two derivatives, |u| < 1. */
inline HSeries h_series(cplx u)
{
    cplx h = 0.0, dh = 0.0, d2h = 0.0;
    cplx upow = 1.0;  // u^k
    double b = 1.0;   // binom(1/2, k) 2^{-k}
    cplx ukm1 = 0.0, ukm2 = 0.0;
    for (int k = 0; k < 120; ++k) {
        if (k > 0) b *= (0.5 - (k - 1)) / (2.0 * k);
        const double c = b / (k + 1.5);
        const cplx term = c * upow;
        h += term;
        if (k >= 1) dh += static_cast<double>(k) * c * ukm1;
        if (k >= 2) d2h += static_cast<double>(k) * (k - 1.0) * c * ukm2;
        if (k > 4 && std::abs(term) < 1e-18 * std::abs(h)) break;
        ukm2 = ukm1;
        ukm1 = upow;
        upow *= u;
    }
    return {h, dh, d2h};
}

/** Closed form xi on C \ (-inf, 1], with the given side for real t < 1. */
inline cplx xi_closed(cplx t, CutSide side)
{
    const cplx ts = sided(t, side);
    const cplx s = std::sqrt(ts - 1.0) * std::sqrt(ts + 1.0);
    return 0.5 * (ts * s - std::log(ts + s));
}

/** u^{p} with the argument of u taken on the requested side of the negative axis. */
inline cplx upow_sided(cplx u, double p, CutSide side) { return std::polar(std::pow(std::abs(u), p), p * arg_side(u, side)); }

/** H(t - 1); analytic off t in (-inf, -1], with side used only on that ray. */
inline cplx h_of_t(cplx t, CutSide side = CutSide::lower)
{
    const cplx u = t - 1.0;
    if (std::abs(u) < 0.5) return h_series(u).h;
    const cplx ts = sided(t, side);
    const cplx us = sided(u, side);
    return xi_closed(ts, side) / (std::sqrt(2.0) * upow_sided(us, 1.5, side));
}

} // namespace detail

/** \brief xi(t) with an explicit side for t on (-inf, 1]. */
inline XiValue xi(cplx t, CutSide side)
{
    const cplx u = t - 1.0;
    if (u == 0.0) return {BranchedComplex(0.0, 0.0), t, side};
    const cplx h = detail::h_of_t(t, side);
    const double mod = std::sqrt(2.0) * std::pow(std::abs(u), 1.5) * std::abs(h);
    const double a = 1.5 * arg_side(u, side) + std::arg(h);
    return {BranchedComplex(mod, a), t, side};
}

/** \brief xi(t); a real t < 1 requires an explicit side. */
inline XiValue xi(cplx t)
{
    if (detail::on_real_axis(t) && t.real() < 1.0) fail(ErrorKind::branch, "xi on (-inf, 1) needs a cut side");
    return xi(t, CutSide::lower);
}

/** \brief xi'(t) = sqrt(t^2 - 1) on the branch matching xi (lower side on the cut). */
inline cplx xi_prime(cplx t, CutSide side = CutSide::lower)
{
    const cplx u = t - 1.0;
    return detail::upow_sided(detail::sided(u, side), 0.5, side) * std::sqrt(detail::sided(t + 1.0, side));
}

/** \brief True when t lies in D_T = (-1, 1] union {|arg xi| < 3pi/2}. */
inline bool in_DT(cplx t, double tol = 1e-12)
{
    if (detail::on_real_axis(t) && t.real() > -1.0) return true;
    if (detail::on_real_axis(t) && t.real() <= -1.0) return false;
    return std::abs(xi(t, CutSide::lower).value.arg) < 1.5 * pi - tol;
}

namespace detail {

inline void check_eta_cut(cplx t)
{
    if (on_real_axis(t) && t.real() < -1.0) fail(ErrorKind::branch, "eta is cut along (-inf, -1]");
}

inline cplx eta_nocheck(cplx t)
{
    const cplx u = t - 1.0;
    if (std::abs(u) < 0.5) return c_eta * u * std::pow(h_series(u).h, 2.0 / 3.0);
    return c_eta * u * std::pow(h_of_t(t), 2.0 / 3.0);
}

inline cplx eta_prime_nocheck(cplx t)
{
    const cplx u = t - 1.0;
    const cplx h = std::abs(u) < 0.5 ? h_series(u).h : h_of_t(t);
    return std::sqrt(sided(t + 1.0, CutSide::lower)) / (c_eta13 * std::pow(h, 1.0 / 3.0));
}

} // namespace detail

/** \brief eta(t) = (3/2 xi(t))^{2/3}, analytic on C \ (-inf, -1]. */
inline cplx eta(cplx t)
{
    detail::check_eta_cut(t);
    return detail::eta_nocheck(t);
}

inline cplx eta_prime(cplx t)
{
    detail::check_eta_cut(t);
    return detail::eta_prime_nocheck(t);
}

inline cplx eta_second(cplx t)
{
    detail::check_eta_cut(t);
    const cplx u = t - 1.0;
    if (std::abs(u) < 0.5) {
        // eta = c u G, G = H^{2/3}
        const detail::HSeries hs = detail::h_series(u);
        const cplx h13 = std::pow(hs.h, 1.0 / 3.0);
        const cplx g1 = (2.0 / 3.0) * hs.dh / h13;
        const cplx g2 = (2.0 / 3.0) * hs.d2h / h13 - (2.0 / 9.0) * hs.dh * hs.dh / (h13 * hs.h);
        return detail::c_eta * (2.0 * g1 + u * g2);
    }
    const cplx e = detail::eta_nocheck(t);
    const cplx p = detail::eta_prime_nocheck(t);
    return (2.0 * t - p * p * p) / (2.0 * e * p);
}

/**
 * \brief Inverse of eta on C \ (-inf, eta_E], optionally warm-started.
 *
 * Newton iteration from the large-|eta| expansion, or continuation from t = 1
 * along the segment [0, eta] when the direct start fails.
 */
inline cplx t_of_eta(cplx e, std::optional<cplx> guess = std::nullopt)
{
    if (detail::on_real_axis(e) && e.real() <= eta_E) fail(ErrorKind::domain, "eta on the excluded ray (-inf, eta_E]");
    if (e == 0.0) return 1.0;
    auto newton = [&](cplx target, cplx t, int maxit) -> std::optional<cplx> {
        for (int it = 0; it < maxit; ++it) {
            if (detail::on_real_axis(t) && t.real() < -1.0) t = cplx(t.real(), -1e-300);
            const cplx f = detail::eta_nocheck(t) - target;
            const cplx d = detail::eta_prime_nocheck(t);
            if (d == 0.0 || !std::isfinite(std::abs(f))) return std::nullopt;
            cplx step = f / d;
            const double lim = 0.5 * std::max(1.0, std::abs(t));
            if (std::abs(step) > lim) step *= lim / std::abs(step);
            t -= step;
            if (std::abs(step) <= 4e-16 * (1.0 + std::abs(t))) {
                const cplx r = detail::eta_nocheck(t) - target;
                if (std::abs(r) <= 1e-12 * (1.0 + std::abs(target))) return t;
                return std::nullopt;
            }
        }
        const cplx r = detail::eta_nocheck(t) - target;
        if (std::abs(r) <= 1e-12 * (1.0 + std::abs(target))) return t;
        return std::nullopt;
    };
    auto accept = [&](cplx t) { return in_DT(t, -1e-9); };

    if (guess) {
        if (auto t = newton(e, *guess, 40); t && accept(*t)) return *t;
    }
    if (std::abs(e) > 4.0) {
        cplx t0 = std::sqrt(4.0 / 3.0) * std::pow(e, 0.75);
        const cplx X = (2.0 / 3.0) * std::pow(e, 1.5);
        for (int k = 0; k < 4; ++k) t0 = std::sqrt(4.0 / 3.0) * std::pow(e, 0.75) * std::sqrt(1.0 + (std::log(2.0 * t0) + 0.5) / (2.0 * X));
        if (auto t = newton(e, t0, 60); t && accept(*t)) return *t;
    }
    const int nsteps = 8 + static_cast<int>(4.0 * std::abs(e));
    cplx t = 1.0;
    for (int k = 1; k <= nsteps; ++k) {
        const cplx target = e * (static_cast<double>(k) / nsteps);
        // first-order predictor
        t += (e / static_cast<double>(nsteps)) / detail::eta_prime_nocheck(t);
        auto r = newton(target, t, 60);
        if (!r) fail(ErrorKind::convergence, "t_of_eta continuation failed");
        t = *r;
    }
    return t;
}

// ---------------------------------------------------------------- effective potential

namespace detail {

/** v(eta(t)) from the closed expressions in p = eta'(t), valid away from t = 1. */
inline cplx v_of_t_direct(cplx t)
{
    const cplx e = eta_nocheck(t);
    const cplx p = eta_prime_nocheck(t);
    const cplx p1 = (2.0 * t - p * p * p) / (2.0 * e * p);
    const cplx p2 = (1.0 - 2.5 * p * p * p1 - e * p1 * p1) / (e * p);
    const cplx p2_ = p * p;
    return 0.5 * p2 / (p2_ * p) - 0.75 * p1 * p1 / (p2_ * p2_);
}

} // namespace detail

/**
 * \brief v(eta(t)) = sqrt(t') d^2/d eta^2 (1/sqrt t') expressed in t.
 *
 * Near t = 1 the closed expression is replaced by its mean over a circle.
 */
inline cplx v_of_t(cplx t)
{
    detail::check_eta_cut(t);
    if (std::abs(t + 1.0) < 1e-12) fail(ErrorKind::singularity, "v is singular at eta_E");
    if (std::abs(t - 1.0) < 0.3) {
        constexpr int n = 32;
        cplx s = 0.0;
        for (int k = 0; k < n; ++k) s += detail::v_of_t_direct(t + std::polar(0.4, 2.0 * pi * (k + 0.5) / n));
        return s / static_cast<double>(n);
    }
    return detail::v_of_t_direct(t);
}

/** \brief v(eta) on C \ (-inf, eta_E]. */
inline cplx v_eta(cplx e, std::optional<cplx> t_guess = std::nullopt)
{
    if (std::abs(e - eta_E) < 1e-8) fail(ErrorKind::singularity, "eta too close to eta_E");
    return v_of_t(t_of_eta(e, t_guess));
}

// ---------------------------------------------------------------- z map

/** \brief lambda^{-2/3} as a complex value (principal). */
inline cplx lambda_m23(const SpectralParameter& lam) { return std::polar(std::pow(lam.modulus, -2.0 / 3.0), -4.0 * lam.theta / 3.0); }

inline cplx t_of_x(cplx x, const SpectralParameter& lam) { return x / lam.sqrt(); }

/** \brief z_lambda(x) with its argument on the D_Z sheet: 4 theta/3 + (2/3) arg xi. */
inline BranchedComplex z_of_x_branched(cplx x, const SpectralParameter& lam)
{
    const cplx t = t_of_x(x, lam);
    if (!in_DT(t, -1e-12)) fail(ErrorKind::domain, "x / sqrt(lambda) lies outside D_T");
    const XiValue v = xi(t, CutSide::lower);
    if (v.value.modulus == 0.0) return {0.0, 0.0};
    const BranchedComplex e = pow_branched(BranchedComplex(1.5 * v.value.modulus, v.value.arg), 2.0 / 3.0);
    return lam.pow23() * e;
}

/** \brief z_lambda(x) = lambda^{2/3} eta(x / sqrt lambda). */
inline cplx z_of_x(cplx x, const SpectralParameter& lam)
{
    const cplx t = t_of_x(x, lam);
    if (!in_DT(t, -1e-12)) fail(ErrorKind::domain, "x / sqrt(lambda) lies outside D_T");
    return lam.pow23().value() * eta(t);
}

/** \brief z^{3/2} = (3/2) lambda xi(t) on the sheet fixed by the lower-side convention. */
inline cplx z32_of_x(cplx x, const SpectralParameter& lam)
{
    return 1.5 * lam.value() * xi(t_of_x(x, lam), CutSide::lower).principal();
}

/** \brief z'_lambda(x) = lambda^{1/6} eta'(t). */
inline cplx dz_dx(cplx x, const SpectralParameter& lam)
{
    return std::polar(std::pow(lam.modulus, 1.0 / 6.0), lam.theta / 3.0) * eta_prime(t_of_x(x, lam));
}

/** \brief z''_lambda(x) = lambda^{-1/3} eta''(t). */
inline cplx d2z_dx2(cplx x, const SpectralParameter& lam)
{
    return std::polar(std::pow(lam.modulus, -1.0 / 3.0), -2.0 * lam.theta / 3.0) * eta_second(t_of_x(x, lam));
}

/** \brief z_E(lambda) = lambda^{2/3} eta_E with argument -pi + 4 theta / 3. */
inline BranchedComplex z_E_branched(const SpectralParameter& lam) { return {std::pow(lam.modulus, 2.0 / 3.0) * -eta_E, -pi + 4.0 * lam.theta / 3.0}; }

/** \brief Argument of z on the D_Z sheet, in (arg z_E, arg z_E + 2 pi]. */
inline double arg_on_DZ(cplx z, const SpectralParameter& lam)
{
    const double lo = -pi + 4.0 * lam.theta / 3.0;
    double a = std::arg(z);
    while (a <= lo) a += 2.0 * pi;
    while (a > lo + 2.0 * pi) a -= 2.0 * pi;
    return a;
}

/** \brief x_lambda(z), the inverse of z_lambda on D_Z(lambda). */
inline cplx x_of_z(cplx z, const SpectralParameter& lam, std::optional<cplx> x_guess = std::nullopt)
{
    if (z == 0.0) return lam.sqrt();
    const cplx e = z * lambda_m23(lam);
    // z on the excluded ray maps to eta on (-inf, eta_E]
    if (std::abs(e.imag()) <= 1e-14 * std::abs(e) && e.real() <= eta_E) fail(ErrorKind::domain, "z on the excluded ray of D_Z");
    std::optional<cplx> tg;
    if (x_guess) tg = *x_guess / lam.sqrt();
    return lam.sqrt() * t_of_eta(e, tg);
}

/** \brief V_0(z, lambda) = v(z lambda^{-2/3}) lambda^{-4/3}. */
inline cplx V0(cplx z, const SpectralParameter& lam, std::optional<cplx> t_guess = std::nullopt)
{
    const cplx m = lambda_m23(lam);
    return v_eta(z * m, t_guess) * m * m;
}

/** \brief V_0 at z = z_lambda(x), evaluated through t directly. */
inline cplx V0_at_x(cplx x, const SpectralParameter& lam)
{
    const cplx m = lambda_m23(lam);
    return v_of_t(t_of_x(x, lam)) * m * m;
}

// ---------------------------------------------------------------- ray derivatives

/** \brief d/dr xi(r e^{-i theta}) = e^{-i theta} sqrt(t^2 - 1). */
inline cplx dxi_dr(double r, double theta)
{
    const cplx t = std::polar(r, -theta);
    return std::polar(1.0, -theta) * xi_prime(t, CutSide::lower);
}

/** \brief d^2/dr^2 xi(r e^{-i theta}) = e^{-2 i theta} t / sqrt(t^2 - 1). */
inline cplx d2xi_dr2(double r, double theta)
{
    const cplx t = std::polar(r, -theta);
    return std::polar(1.0, -2.0 * theta) * t / xi_prime(t, CutSide::lower);
}

/** \brief d/dr |xi|^2 along the ray t = r e^{-i theta}. */
inline double dmod2_dr(double r, double theta)
{
    const XiValue v = xi(std::polar(r, -theta), CutSide::lower);
    return 2.0 * (std::conj(v.principal()) * dxi_dr(r, theta)).real();
}

// ---------------------------------------------------------------- turning point

struct TurningPoint {
    cplx x_star;
    cplx t_star;
    double r_star;
    cplx z_star;
};

/** \brief Minimiser x_* of |z_lambda(x)| over x >= 0. */
inline TurningPoint turning_point(const SpectralParameter& lam)
{
    const double th = lam.theta;
    double r = 1.0;
    if (th > 0.0) {
        auto g = [th](double rr) { return dmod2_dr(rr, th); };
        if (g(0.0) >= 0.0) {
            r = 0.0;
        } else {
            const double step = 1e-3;
            double a = 0.0, ga = g(0.0);
            bool found = false;
            for (int i = 1; i <= 2000; ++i) {
                const double b = i * step;
                const double gb = g(b);
                if (gb == 0.0) {
                    r = b;
                    found = true;
                    break;
                }
                if ((ga < 0.0) != (gb < 0.0)) {
                    std::uintmax_t it = 200;
                    auto res = boost::math::tools::toms748_solve(g, a, b, ga, gb, boost::math::tools::eps_tolerance<double>(52), it);
                    r = 0.5 * (res.first + res.second);
                    found = true;
                    break;
                }
                a = b;
                ga = gb;
            }
            if (!found) fail(ErrorKind::convergence, "turning point not bracketed in [0, 2]");
        }
    }
    TurningPoint tp;
    tp.r_star = r;
    tp.t_star = std::polar(r, -th);
    tp.x_star = std::sqrt(lam.modulus) * r;
    tp.z_star = z_of_x(tp.x_star, lam);
    return tp;
}

// ---------------------------------------------------------------- Gamma_lambda

struct GammaContour {
    SpectralParameter lambda;
    std::vector<cplx> nodes;
    std::vector<double> x_params;
    std::vector<double> kappa_params;
    std::vector<double> weights;
    std::size_t split_index = 0;
};

namespace detail {

/** Geometric grid of m intervals on [0, len] with spacing growing by \p ratio away from 0. */
inline std::vector<double> geometric_offsets(double len, int m, double ratio)
{
    std::vector<double> out{0.0};
    if (m <= 0 || len <= 0.0) return out;
    const double h0 = len * (ratio - 1.0) / (std::pow(ratio, m) - 1.0);
    double acc = 0.0, h = h0;
    for (int i = 0; i < m; ++i) {
        acc += h;
        h *= ratio;
        out.push_back(i + 1 == m ? len : acc);
    }
    return out;
}

} // namespace detail

/** \brief kappa(x) = Re(e^{2 i theta} xi(x / sqrt lambda)). */
inline double kappa_of_x(double x, const SpectralParameter& lam)
{
    return (std::polar(1.0, 2.0 * lam.theta) * xi(t_of_x(x, lam), CutSide::lower).principal()).real();
}

/** \brief chi(x) = Im(e^{2 i theta} xi(x / sqrt lambda)). */
inline double chi_of_x(double x, const SpectralParameter& lam)
{
    return (std::polar(1.0, 2.0 * lam.theta) * xi(t_of_x(x, lam), CutSide::lower).principal()).imag();
}

/** \brief Nodes z_lambda(x_i) on a grid graded geometrically (ratio 1.1) around x_*. */
inline GammaContour gamma_contour(const SpectralParameter& lam, double x_max, int n)
{
    if (n < 16) fail(ErrorKind::usage, "gamma_contour needs at least 16 nodes");
    const TurningPoint tp = turning_point(lam);
    const double xs = tp.x_star.real();
    if (!(x_max > xs)) fail(ErrorKind::usage, "x_max must exceed x_*");
    const double left = xs, right = x_max - xs;
    int ml = left > 0.0 ? std::max(2, static_cast<int>(std::lround((n - 1) * left / (left + right)))) : 0;
    int mr = std::max(2, n - 1 - ml);
    GammaContour g;
    g.lambda = lam;
    const auto lo = detail::geometric_offsets(left, ml, 1.1);
    const auto ro = detail::geometric_offsets(right, mr, 1.1);
    for (int i = ml; i >= 1; --i) g.x_params.push_back(xs - lo[i]);
    g.split_index = g.x_params.size();
    for (double o : ro) g.x_params.push_back(xs + o);
    if (ml > 0) g.x_params.front() = 0.0;
    const std::size_t m = g.x_params.size();
    g.nodes.resize(m);
    g.kappa_params.resize(m);
    g.weights.assign(m, 0.0);
    std::vector<double> speed(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = g.x_params[i];
        g.nodes[i] = i == g.split_index ? tp.z_star : z_of_x(x, lam);
        g.kappa_params[i] = kappa_of_x(x, lam);
        speed[i] = std::abs(dz_dx(x, lam));
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double h = g.x_params[i + 1] - g.x_params[i];
        g.weights[i] += 0.5 * h * speed[i];
        g.weights[i + 1] += 0.5 * h * speed[i + 1];
    }
    return g;
}

namespace detail {

/** Bisection in r for a function of r increasing from below \p target. */
template <class F>
double bisect_increasing(F f, double target, double lo, double hi)
{
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

/** \brief Point s_lambda(kappa) of Gamma_lambda with Re(e^{2 i theta} xi) = kappa; also returns x. */
inline cplx gamma_by_kappa(const SpectralParameter& lam, double kappa, double* x_out = nullptr)
{
    const double th = lam.theta;
    auto f = [th](double r) { return (std::polar(1.0, 2.0 * th) * xi(std::polar(r, -th), CutSide::lower).principal()).real(); };
    const double k0 = f(0.0);
    if (kappa < k0 - 1e-14) fail(ErrorKind::range, "kappa below kappa_0");
    double hi = 2.0;
    while (f(hi) < kappa) hi *= 2.0;
    const double r = kappa <= k0 ? 0.0 : detail::bisect_increasing(f, kappa, 0.0, hi);
    const double x = std::sqrt(lam.modulus) * r;
    if (x_out) *x_out = x;
    return z_of_x(x, lam);
}

/** \brief Point w_lambda(chi) of Gamma_lambda^- with Im(e^{2 i theta} xi) = chi; also returns x. */
inline cplx gamma_by_chi(const SpectralParameter& lam, double chi, double* x_out = nullptr)
{
    const double th = lam.theta;
    const TurningPoint tp = turning_point(lam);
    auto f = [th](double r) { return -(std::polar(1.0, 2.0 * th) * xi(std::polar(r, -th), CutSide::lower).principal()).imag(); };
    const double chi0 = -f(0.0), chis = -f(tp.r_star);
    if (chi > chi0 + 1e-14 || chi < chis - 1e-14) fail(ErrorKind::range, "chi outside [chi_*, chi_0]");
    double r;
    if (chi >= chi0) r = 0.0;
    else if (chi <= chis) r = tp.r_star;
    else r = detail::bisect_increasing(f, -chi, 0.0, tp.r_star);
    const double x = std::sqrt(lam.modulus) * r;
    if (x_out) *x_out = x;
    return z_of_x(x, lam);
}

// ---------------------------------------------------------------- integrals along Gamma_lambda

enum class GammaIntegralKind { exp_decay, exp_grow, power, mixed, v0 };

/**
 * \brief Arc-length integral along Gamma_lambda(x_from, x_to), parametrised by x.
 *
 * For exp_decay the exponential factor is normalised at x_from, for exp_grow at
 * x_to, so the result is the left side divided by |e^{-+4/3 z^{3/2}}| of the
 * theorem's reference point. x_to may be +infinity except for exp_grow.
 */
inline double gamma_integral(const SpectralParameter& lam, double x_from, double x_to, double alpha, GammaIntegralKind kind,
                             double* error_estimate = nullptr)
{
    if (kind == GammaIntegralKind::exp_grow && !std::isfinite(x_to)) fail(ErrorKind::usage, "exp_grow needs a finite upper endpoint");
    if (!(x_to >= x_from)) fail(ErrorKind::usage, "gamma_integral needs x_from <= x_to");
    const cplx lamv = lam.value();
    const double l23 = std::pow(lam.modulus, 2.0 / 3.0);
    const double l43 = l23 * l23;
    cplx ref32 = 0.0;
    if (kind == GammaIntegralKind::exp_decay) ref32 = z32_of_x(x_from, lam);
    if (kind == GammaIntegralKind::exp_grow) ref32 = z32_of_x(x_to, lam);
    auto f = [&](double x) -> double {
        const cplx t = t_of_x(x, lam);
        const double sp = std::abs(dz_dx(x, lam));
        const double as = std::abs(lam.pow23().value() * eta(t));
        switch (kind) {
        case GammaIntegralKind::exp_decay: {
            const cplx s32 = 1.5 * lamv * xi(t, CutSide::lower).principal();
            return sp * std::exp(-(4.0 / 3.0) * (s32 - ref32).real()) / std::pow(1.0 + as, alpha);
        }
        case GammaIntegralKind::exp_grow: {
            const cplx s32 = 1.5 * lamv * xi(t, CutSide::lower).principal();
            return sp * std::exp((4.0 / 3.0) * (s32 - ref32).real()) / std::pow(1.0 + as, alpha);
        }
        case GammaIntegralKind::power: return sp / std::pow(1.0 + as, alpha);
        case GammaIntegralKind::mixed: return sp / ((1.0 + as) * std::pow(1.0 + as / l23, alpha));
        case GammaIntegralKind::v0: return sp / (l43 + as * as);
        }
        return 0.0;
    };
    double err = 0.0;
    double total = 0.0;
    // Split at x_* and at a few multiples of sqrt|lambda| to help the adaptive rule.
    std::vector<double> cuts{x_from};
    const double sl = std::sqrt(lam.modulus);
    for (double c : {0.5 * sl, sl, 2.0 * sl, 4.0 * sl, 8.0 * sl})
        if (c > x_from && c < x_to) cuts.push_back(c);
    cuts.push_back(x_to);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double e = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, cuts[i], cuts[i + 1], 15, 1e-11, &e);
        err += e;
    }
    if (error_estimate) *error_estimate = err;
    return total;
}

} // namespace pcf

#endif
