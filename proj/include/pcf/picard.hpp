#ifndef PCF_PICARD_HPP
#define PCF_PICARD_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include <boost/math/special_functions/legendre.hpp>

#include "bounds.hpp"

namespace pcf {

/**
 * \brief Constant c of the kernel J(z, s) = c (a(z) a(s w) - e^{4/3 (z^{3/2} - s^{3/2})} a(z w) a(s)).
 *
 * With W{Ai, Bi} = 1/pi and the integral taken from z outwards, c = 2 pi i e^{-i pi/3}.
 */
inline const cplx picard_kernel_constant = 2.0 * pi * cplx(0.0, 1.0) * std::polar(1.0, -pi / 3.0);

/** \brief Airy seed a(z) = Ai(z) e^{2/3 z^{3/2}} (principal power). */
inline cplx airy_a(cplx z) { return airy_scaled(z).ai; }

/** \brief J(z, s) with z^{3/2}, s^{3/2} supplied on a common sheet. */
inline cplx kernel_J(cplx z, cplx s, cplx z32, cplx s32)
{
    auto pw = [](cplx w) { return pow32_lower(w); };
    const AiryValue az = airy_scaled(z), as = airy_scaled(s), awz = airy_scaled(omega * z), aws = airy_scaled(omega * s);
    const cplx t1 = az.ai * aws.ai * std::exp((2.0 / 3.0) * (z32 - pw(z)) - (2.0 / 3.0) * (pw(omega * s) + s32));
    const cplx t2 = awz.ai * as.ai * std::exp((2.0 / 3.0) * (z32 - pw(omega * z)) - (2.0 / 3.0) * (pw(s) + s32));
    return picard_kernel_constant * (t1 - t2);
}

/** \brief J(z, s) with principal powers. */
inline cplx kernel_J(cplx z, cplx s) { return kernel_J(z, s, pow32_lower(z), pow32_lower(s)); }

struct PicardOptions {
    double tol = 1e-10;
    int max_iter = 50;
    int panel_order = 16;
    double fine_panel_length = 3.0;  ///< panel length cap in the contour parameter near the anchor
    double refine = 1.0;             ///< > 1 shrinks every panel-length rule by this factor
    bool zero_potential = false;     ///< test hook: V_0 == 0
    std::optional<double> phi;       ///< force a contour direction
};

struct PicardRun {
    SpectralParameter lambda;
    SolutionVariant variant = SolutionVariant::zero;
    cplx anchor_z;
    cplx zeta;
    double phi = 0.0;
    double T = 0.0;
    int n = 0;
    std::vector<double> iterates;
    bool converged = false;
    cplx a_value;
    cplx a_derivative;
    cplx kernel_constant = picard_kernel_constant;

    /** \brief Ratio of the second to the first sup-change, or 0 when unavailable. */
    double contraction() const { return iterates.size() >= 2 && iterates[0] > 0.0 ? iterates[1] / iterates[0] : 0.0; }
};

namespace detail {

/** Gauss-Legendre rule of order m on [-1, 1] with the integration matrix M_kj = int_{tau_k}^1 l_j. */
struct PanelRule {
    int m = 0;
    std::vector<double> tau, w;
    std::vector<double> M;       // m x m, row-major
    std::vector<double> left;    // l_j(-1)
    std::vector<double> deriv;   // m x m, differentiation at nodes

    explicit PanelRule(int order) : m(order)
    {
        const auto zeros = boost::math::legendre_p_zeros<double>(order);
        for (double z : zeros) {
            if (z > 0.0) tau.push_back(-z);
        }
        if (order % 2 == 1) tau.push_back(0.0);
        for (double z : zeros)
            if (z > 0.0) tau.push_back(z);
        std::sort(tau.begin(), tau.end());
        w.resize(m);
        for (int j = 0; j < m; ++j) {
            const double dp = boost::math::legendre_p_prime(order, tau[j]);
            w[j] = 2.0 / ((1.0 - tau[j] * tau[j]) * dp * dp);
        }
        // Legendre coefficients of l_j: c_nj = (2n+1)/2 w_j P_n(tau_j)
        std::vector<double> P(static_cast<std::size_t>(m) * (m + 1));
        for (int j = 0; j < m; ++j)
            for (int n = 0; n <= m; ++n) P[j * (m + 1) + n] = boost::math::legendre_p(n, tau[j]);
        M.assign(static_cast<std::size_t>(m) * m, 0.0);
        left.assign(m, 0.0);
        deriv.assign(static_cast<std::size_t>(m) * m, 0.0);
        for (int j = 0; j < m; ++j) {
            for (int n = 0; n < m; ++n) {
                const double c = (2.0 * n + 1.0) / 2.0 * w[j] * P[j * (m + 1) + n];
                left[j] += c * (n % 2 == 0 ? 1.0 : -1.0);
                for (int k = 0; k < m; ++k) {
                    const double tk = tau[k];
                    const double integral = n == 0 ? 1.0 - tk : -(P[k * (m + 1) + n + 1] - P[k * (m + 1) + n - 1]) / (2.0 * n + 1.0);
                    M[k * m + j] += c * integral;
                    deriv[k * m + j] += c * boost::math::legendre_p_prime(n, tk);
                }
            }
        }
    }
};

inline const PanelRule& panel_rule(int order)
{
    static thread_local std::vector<std::pair<int, PanelRule>> cache;
    for (auto& p : cache)
        if (p.first == order) return p.second;
    cache.emplace_back(order, PanelRule(order));
    return cache.back().second;
}

/** True when the segment p -> q crosses the ray {e^{i a} u : u >= u0}. */
inline bool segment_crosses_ray(cplx p, cplx q, double a, double u0)
{
    const cplx rot = std::polar(1.0, -a);
    const cplx pp = p * rot, qq = q * rot;
    if ((pp.imag() > 0.0) == (qq.imag() > 0.0) && pp.imag() != 0.0 && qq.imag() != 0.0) return false;
    const double den = pp.imag() - qq.imag();
    const double s = den == 0.0 ? 0.0 : pp.imag() / den;
    const double xr = pp.real() + s * (qq.real() - pp.real());
    return xr >= u0;
}

struct Panel {
    double a, b;
    bool far;
};

} // namespace detail

/** \brief Rotation r (zeta = r z) of the variant's rotated problem. */
inline cplx picard_rotation(SolutionVariant v) { return a_rotation(v); }

/** \brief Whether z lies in the asymptotic sector of the variant. */
inline bool in_asymptotic_sector(SolutionVariant v, cplx z, const SpectralParameter& lam, double delta, double eps, double tol = 1e-12)
{
    const double th = lam.theta;
    auto in = [&](double lo, double hi) { return detail::in_sector(lo, hi, z, tol); };
    switch (v) {
    case SolutionVariant::zero: return in(-pi + 4.0 * th / 3.0 + eps, pi - delta / 3.0);
    case SolutionVariant::plus: return in(-pi + 4.0 * th / 3.0 + eps, pi / 3.0 - delta / 3.0);
    case SolutionVariant::minus: return in(-pi / 3.0 + delta / 3.0, pi + 4.0 * th / 3.0 - eps);
    case SolutionVariant::star: return in(pi / 3.0 + delta / 3.0, pi + 4.0 * th / 3.0 - eps);
    }
    return false;
}

namespace detail {

/** Admissible range of the far direction phi of Upsilon in the zeta-plane for each variant. */
inline std::pair<double, double> phi_window(SolutionVariant v, const SpectralParameter& lam, double delta, double eps)
{
    const double th = lam.theta;
    double lo = -pi / 3.0 + delta / 3.0, hi = pi / 3.0 - delta / 3.0;
    if (v == SolutionVariant::plus) lo = std::max(lo, -pi / 3.0 + 4.0 * th / 3.0 + eps);
    if (v == SolutionVariant::star) hi = std::min(hi, -pi / 3.0 + 4.0 * th / 3.0 - eps);
    return {lo, hi};
}

/** Panel breakpoints for Upsilon in the parameter t, refined near t = 0 and near r z_E. */
inline std::vector<Panel> upsilon_panels(const UpsilonContour& c, cplx r, const SpectralParameter& lam, const PicardOptions& opt, double& t_end)
{
    const double l23 = std::pow(lam.modulus, 2.0 / 3.0);
    const double r_far = std::max(60.0, 6.0 * l23);  // |sigma| where the far-field treatment starts
    const double r_end = std::max(1e6, 1e6 * l23);
    const double t_far = std::max(c.x0 + 1.0, std::pow(r_far, 1.5));
    t_end = std::max(t_far * 2.0, std::pow(r_end, 1.5));
    const cplx zE_rot = r * z_E_point(lam);
    const double refine = std::max(1.0, opt.refine);
    auto ok = [&](double a, double b) {
        const double rho_min = (a <= 0.0 && b >= 0.0) ? std::abs(c.y) : std::min(std::hypot(a, c.y), std::hypot(b, c.y));
        if (b - a > 0.5 * std::max(rho_min, 1e-9) / refine && b - a > 1e-12) return false;
        if (b <= t_far && b - a > opt.fine_panel_length / refine) return false;
        const cplx sa = c.point(a), sb = c.point(b), sm = c.point(0.5 * (a + b));
        const double dist = std::min({std::abs(sa - zE_rot), std::abs(sb - zE_rot), std::abs(sm - zE_rot)});
        if (std::abs(sb - sa) > 0.5 * dist / refine) return false;
        return true;
    };
    std::vector<double> breaks{c.x0};
    if (c.x0 < 0.0) breaks.push_back(0.0);
    if (t_far > breaks.back()) breaks.push_back(t_far);
    breaks.push_back(t_end);
    std::vector<Panel> out;
    std::vector<std::pair<double, double>> stack;
    for (std::size_t i = breaks.size() - 1; i >= 1; --i) stack.emplace_back(breaks[i - 1], breaks[i]);
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (ok(a, b)) {
            out.push_back({a, b, a >= t_far - 1e-9});
            continue;
        }
        double mid = 0.5 * (a + b);
        // geometric split far from the origin of the parameter
        if (a > 0.0 && b > 4.0 * a) mid = std::sqrt(a * b);
        stack.emplace_back(mid, b);
        stack.emplace_back(a, mid);
        if (stack.size() > 200000) fail(ErrorKind::resolution, "Upsilon panel refinement did not terminate");
    }
    return out;
}

/** Checks that the contour image sigma / r stays in D_Z^delta and does not cross the excluded ray. */
inline bool contour_admissible(const UpsilonContour& c, cplx r, const DomainSpec& dz, double t_end)
{
    const SpectralParameter& lam = dz.lambda;
    const cplx zE = z_E_point(lam);
    const double aE = std::arg(zE), uE = std::abs(zE) * std::cos(dz.epsilon);
    cplx prev = c.point(c.x0) / r;
    if (!in_domain(dz, prev)) return false;
    // sample densely in the near region, geometrically beyond
    double t = c.x0;
    const double scale = std::max(1.0, std::abs(c.y));
    while (t < t_end) {
        const double step = std::max(0.05, 0.05 * std::max(std::abs(t), scale));
        t = std::min(t_end, t + step);
        if (t == 0.0 && c.y == 0.0) continue;
        const cplx cur = c.point(t) / r;
        if (!in_domain(dz, cur)) return false;
        if (segment_crosses_ray(prev, cur, aE, uE)) return false;
        prev = cur;
    }
    return true;
}

} // namespace detail

/**
 * \brief Contour directions for Upsilon_phi(r z) that avoid B_eps and its shadow.
 *
 * Candidates are ordered by distance from choose_phi.
 */
inline std::vector<double> admissible_phis(SolutionVariant v, cplx z, const SpectralParameter& lam, double delta, double eps, int count = 1)
{
    const cplx r = picard_rotation(v);
    const cplx zeta = r * z;
    const auto [lo0, hi0] = detail::phi_window(v, lam, delta, eps);
    const double az = std::arg(zeta);
    const double reach = 2.0 * pi / 3.0 - delta / 3.0;
    std::vector<double> cands;
    constexpr int ngrid = 48;
    for (int k = 0; k <= ngrid; ++k) {
        const double ph = lo0 + (hi0 - lo0) * k / ngrid;
        if (hi0 < lo0) break;
        if (std::abs(detail::wrap_pi(az - ph)) > reach) continue;
        cands.push_back(ph);
    }
    const double pref = std::clamp(az, lo0, hi0);
    std::stable_sort(cands.begin(), cands.end(), [&](double a, double b) { return std::abs(a - pref) < std::abs(b - pref); });
    const DomainSpec dz(DomainKind::DZdelta, lam, delta, eps);
    std::vector<double> out;
    PicardOptions o;
    for (double ph : cands) {
        const UpsilonContour c = detail::upsilon_frame(zeta, ph);
        if (c.degenerate) continue;
        double t_end = 0.0;
        (void)detail::upsilon_panels(c, r, lam, o, t_end);
        if (detail::contour_admissible(c, r, dz, t_end)) {
            out.push_back(ph);
            if (static_cast<int>(out.size()) >= count) break;
        }
    }
    return out;
}

/**
 * \brief Solves v = a + int_{Upsilon} J V v along Upsilon_phi(zeta), zeta = r z, by Picard iteration.
 *
 * Returns a_nu(z) = v(zeta) and d a_nu / dz = r v'(zeta).
 */
inline PicardRun solve_a_variant(SolutionVariant v, cplx z, const SpectralParameter& lam, double delta, const PicardOptions& opt = {},
                                 std::optional<double> eps_in = std::nullopt)
{
    const double eps = eps_in ? *eps_in : select_epsilon(delta);
    if (!variant_admits_lambda(v, lam, delta)) fail(ErrorKind::domain, "lambda outside the variant's range");
    if (z == 0.0) fail(ErrorKind::domain, "Picard anchor at 0");
    const DomainSpec dz(DomainKind::DZdelta, lam, delta, eps);
    if (!in_domain(dz, z)) fail(ErrorKind::domain, "anchor outside D_Z^delta");
    if (!in_asymptotic_sector(v, z, lam, delta, eps)) {
        const auto dom = theorem_domain_spec(v, lam, delta, eps);
        if (!dom || !in_domain(*dom, z)) fail(ErrorKind::domain, "anchor outside the variant's sector and theorem domain");
    }
    const cplx r = picard_rotation(v);
    const cplx zeta = r * z;
    double phi;
    if (opt.phi) {
        phi = *opt.phi;
    } else {
        const auto ph = admissible_phis(v, z, lam, delta, eps, 1);
        if (ph.empty()) fail(ErrorKind::contour, "no admissible Upsilon direction");
        phi = ph.front();
    }
    const UpsilonContour c = detail::upsilon_frame(zeta, phi);
    if (c.degenerate) fail(ErrorKind::contour, "degenerate Upsilon contour");
    double t_end = 0.0;
    const auto panels = detail::upsilon_panels(c, r, lam, opt, t_end);
    const detail::PanelRule& rule = detail::panel_rule(opt.panel_order);
    const int m = rule.m;
    const std::size_t np = panels.size(), N = np * m;
    // Second Airy solution Ai(w s): w = omega below the anchor level, w = omega-bar above it, so that
    // the split kernel terms stay bounded on the contour. The Green kernel itself does not depend on w.
    const cplx wq = c.y > 0.0 ? omega_bar : omega;
    const cplx cc = c.y > 0.0 ? std::conj(picard_kernel_constant) : picard_kernel_constant;
    const cplx kappa = (4.0 / 3.0) * std::polar(1.0, 1.5 * phi);
    const cplx r2inv = 1.0 / (r * r);
    const cplx lm23 = lambda_m23(lam);

    // node data
    std::vector<double> tn(N);
    std::vector<cplx> sig(N), ds(N), aseed(N), q1(N), vpot(N);
    std::optional<cplx> tguess;
    for (std::size_t p = 0; p < np; ++p) {
        const double a = panels[p].a, b = panels[p].b;
        for (int k = 0; k < m; ++k) {
            const std::size_t i = p * m + k;
            const double t = 0.5 * (a + b) + 0.5 * (b - a) * rule.tau[k];
            tn[i] = t;
            sig[i] = c.point(t);
            ds[i] = c.tangent(t);
            const cplx s32 = c.s32(t);
            const AiryValue as = airy_scaled(sig[i]);
            const cplx ws = wq * sig[i];
            const AiryValue aws = airy_scaled(ws);
            aseed[i] = as.ai * std::exp((2.0 / 3.0) * (s32 - pow32_lower(sig[i])));
            q1[i] = aws.ai * std::exp(-(2.0 / 3.0) * (pow32_lower(ws) + s32));
            if (opt.zero_potential) {
                vpot[i] = 0.0;
            } else {
                const cplx e = sig[i] / r * lm23;
                const cplx tt = t_of_eta(e, tguess);
                tguess = tt;
                vpot[i] = r2inv * v_of_t(tt) * lm23 * lm23;
            }
        }
    }

    // anchor data
    const cplx z32 = c.s32(c.x0);
    const AiryValue a0 = airy_scaled(zeta), aw0 = airy_scaled(wq * zeta);
    const cplx e_a = std::exp((2.0 / 3.0) * (z32 - pow32_lower(zeta)));
    const cplx e_w = std::exp(-(2.0 / 3.0) * (pow32_lower(wq * zeta) + z32));
    const cplx a_anchor = a0.ai * e_a;
    const cplx q1_anchor = aw0.ai * e_w;
    const cplx zroot = z32 / zeta;  // zeta^{1/2} on the contour sheet
    const cplx da_anchor = (a0.ai_prime + zroot * a0.ai) * e_a;
    const cplx gt_anchor = (wq * aw0.ai_prime + zroot * aw0.ai) * e_w;

    std::vector<cplx> vcur = aseed, vnext(N), f(N), Ip(N), Ie(N);
    cplx Ip_anchor = 0.0, Ie_anchor = 0.0;

    auto apply = [&](const std::vector<cplx>& vv) {
        for (std::size_t i = 0; i < N; ++i) f[i] = vpot[i] * vv[i] * ds[i];
        cplx tail_p = 0.0;  // int over later panels of q1 f dt
        cplx tail_e = 0.0;  // int over later panels of e^{-kappa (t - b_p)} a f dt
        for (std::size_t pp = np; pp-- > 0;) {
            const double a = panels[pp].a, b = panels[pp].b, h = 0.5 * (b - a);
            const std::size_t base = pp * m;
            if (panels[pp].far) {
                // local Laplace term for the exponential part, valid when the panel is long on the 1/kappa scale
                for (int k = 0; k < m; ++k) {
                    const std::size_t i = base + k;
                    Ie[i] = aseed[i] * f[i] / kappa;
                }
                cplx s_p = 0.0;
                for (int k = m; k-- > 0;) {
                    cplx acc = 0.0;
                    for (int j = 0; j < m; ++j) acc += rule.M[k * m + j] * q1[base + j] * f[base + j];
                    Ip[base + k] = h * acc + tail_p;
                }
                for (int j = 0; j < m; ++j) s_p += rule.w[j] * q1[base + j] * f[base + j];
                tail_p += h * s_p;
                cplx fl = 0.0;
                for (int j = 0; j < m; ++j) fl += rule.left[j] * aseed[base + j] * f[base + j];
                tail_e = fl / kappa;
                continue;
            }
            for (int k = 0; k < m; ++k) {
                const std::size_t i = base + k;
                cplx accp = 0.0, acce = 0.0;
                for (int j = 0; j < m; ++j) {
                    const std::size_t jj = base + j;
                    accp += rule.M[k * m + j] * q1[jj] * f[jj];
                    acce += rule.M[k * m + j] * std::exp(-kappa * (tn[jj] - tn[i])) * aseed[jj] * f[jj];
                }
                Ip[i] = h * accp + tail_p;
                Ie[i] = h * acce + std::exp(-kappa * (b - tn[i])) * tail_e;
            }
            cplx sp = 0.0, se = 0.0;
            for (int j = 0; j < m; ++j) {
                const std::size_t jj = base + j;
                sp += rule.w[j] * q1[jj] * f[jj];
                se += rule.w[j] * std::exp(-kappa * (tn[jj] - a)) * aseed[jj] * f[jj];
            }
            tail_p += h * sp;
            tail_e = h * se + std::exp(-kappa * (b - a)) * tail_e;
        }
        Ip_anchor = tail_p;
        Ie_anchor = tail_e * std::exp(-kappa * (panels.front().a - c.x0));
    };

    PicardRun run;
    run.lambda = lam;
    run.variant = v;
    run.anchor_z = z;
    run.zeta = zeta;
    run.phi = phi;
    run.T = t_end - c.x0;
    run.n = static_cast<int>(N);
    double scale = 0.0;
    for (const cplx& x : aseed) scale = std::max(scale, std::abs(x));
    scale = std::max(scale, std::abs(a_anchor));
    run.kernel_constant = cc;
    for (int it = 0; it < opt.max_iter; ++it) {
        apply(vcur);
        double change = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            vnext[i] = aseed[i] + cc * (aseed[i] * Ip[i] - q1[i] * Ie[i]);
            change = std::max(change, std::abs(vnext[i] - vcur[i]));
        }
        change /= scale;
        run.iterates.push_back(change);
        vcur.swap(vnext);
        if (change < opt.tol) {
            run.converged = true;
            break;
        }
    }
    if (!run.converged) fail(ErrorKind::convergence, "Picard iteration did not converge");
    apply(vcur);
    run.a_value = a_anchor * (1.0 + cc * Ip_anchor) - cc * q1_anchor * Ie_anchor;
    run.a_derivative = r * (da_anchor * (1.0 + cc * Ip_anchor) - cc * gt_anchor * Ie_anchor);
    return run;
}

/** \brief Variant 0 wrapper. */
inline PicardRun solve_a0(cplx z, const SpectralParameter& lam, double delta, const PicardOptions& opt = {})
{
    return solve_a_variant(SolutionVariant::zero, z, lam, delta, opt);
}

} // namespace pcf

#endif
