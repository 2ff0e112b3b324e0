#include "pcf/harness/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "pcf/bounds.hpp"
#include "pcf/harness/parallel.hpp"

namespace pcf::harness {

std::vector<double> LemmaGrid::radii() const
{
    std::vector<double> out;
    out.reserve(r_count);
    for (int i = 0; i < r_count; ++i) out.push_back(r_max * i / (r_count - 1));
    return out;
}

LemmaGrid default_lemma_grid(double delta)
{
    LemmaGrid g;
    g.delta = delta;
    for (int k = 0; k <= 12; ++k) g.thetas.push_back(k * pi / 24.0);
    for (double m : {1.0, 4.0, 16.0})
        for (double a : {0.0, delta / 2, delta, pi / 4, pi / 2, 3 * pi / 4, pi - delta, pi}) g.lambdas.push_back(SpectralParameter::polar(m, a));
    return g;
}

void MarginTracker::add(const std::string& clause, double margin, double theta, double r)
{
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.clause == clause; });
    if (it == entries_.end()) {
        entries_.push_back({clause, 1, margin, theta, r});
        return;
    }
    ++it->samples;
    if (margin < it->worst || std::isnan(margin)) {
        if (!std::isnan(it->worst)) {
            it->worst = margin;
            it->theta = theta;
            it->r = r;
        }
    }
}

void MarginTracker::merge(const MarginTracker& other)
{
    for (const auto& o : other.entries_) {
        auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.clause == o.clause; });
        if (it == entries_.end()) {
            entries_.push_back(o);
            continue;
        }
        it->samples += o.samples;
        if ((o.worst < it->worst || std::isnan(o.worst)) && !std::isnan(it->worst)) {
            it->worst = o.worst;
            it->theta = o.theta;
            it->r = o.r;
        }
    }
}

namespace {

SuiteOutput margins_output(const std::string& suite, const MarginTracker& m, double tol, const std::set<std::string>& strict = {})
{
    SuiteOutput out;
    CsvTable t(suite, {"clause", "samples", "worst_margin", "theta", "r", "status"});
    for (const auto& e : m.entries()) {
        const bool is_strict = strict.count(e.clause) > 0;
        const double floor = is_strict ? 0.0 : -tol;
        CheckResult c = check_at_least(suite + "." + e.clause, "min_margin", e.worst, floor, e.samples);
        if (is_strict && !(e.worst > 0.0)) c.status = Status::fail;
        t.cell(e.clause).cell(e.samples).cell(e.worst).cell(e.theta).cell(e.r).cell(c.passed() ? "pass" : "fail");
        t.end_row();
        out.checks.push_back(std::move(c));
    }
    out.tables.push_back(std::move(t));
    return out;
}

void append(SuiteOutput& dst, SuiteOutput src)
{
    for (auto& c : src.checks) dst.checks.push_back(std::move(c));
    for (auto& t : src.tables) dst.tables.push_back(std::move(t));
}

/** Runs \p per_theta for every theta and merges the trackers in theta order. */
template <class F>
MarginTracker over_thetas(const LemmaGrid& g, F&& per_theta)
{
    auto parts = parallel_map(g.thetas.size(), g.jobs, [&](std::size_t i) { return per_theta(g.thetas[i]); });
    MarginTracker all;
    for (const auto& p : parts) all.merge(p);
    return all;
}

cplx ray_point(double r, double th) { return std::polar(r, -th); }

double xi_arg(cplx t) { return xi(t, CutSide::lower).value.arg; }
double xi_abs(cplx t) { return xi(t, CutSide::lower).value.modulus; }

/** arg z represented within pi of \p center. */
double arg_near(cplx z, double center) { return center + detail::wrap_pi(std::arg(z) - center); }

/** phi in t = 1 + eta e^{-i phi}, phi in [0, pi]. */
double phi_of(cplx t) { return -arg_side(t - 1.0, CutSide::lower); }

/** Two-sided interval margins lo <= a <= hi. */
void interval(MarginTracker& m, const std::string& clause, double a, double lo, double hi, double th, double r)
{
    m.add(clause + "_lower", a - lo, th, r);
    m.add(clause + "_upper", hi - a, th, r);
}

double fd_step(double r, double h, const auto& f)
{
    if (r >= h) return (f(r + h) - f(r - h)) / (2.0 * h);
    return (f(r + h) - f(r)) / h;
}

/** Smallest root of an increasing function on [a, b] by bisection. */
template <class F>
double bisect(F&& f, double a, double b)
{
    double fa = f(a);
    for (int i = 0; i < 200 && b - a > 1e-15 * (1.0 + b); ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

SuiteOutput margins_to_output(const std::string& suite, const MarginTracker& m, double tol) { return margins_output(suite, m, tol); }

bool in_particular_range(SolutionVariant v, double al, double x, double xs, double delta)
{
    switch (v) {
    case SolutionVariant::zero: return al >= delta || x >= xs;
    case SolutionVariant::plus: return al <= pi - delta;
    case SolutionVariant::minus: return al <= delta && x <= xs;
    case SolutionVariant::star: return al >= pi / 2 - delta / 2;
    }
    return false;
}

// ---------------------------------------------------------------- lower bounds for |xi| along rays

SuiteOutput suite_xi_bounds(const LemmaGrid& g)
{
    const auto radii = g.radii();
    const MarginTracker m = over_thetas(g, [&](double th) {
        MarginTracker mt;
        for (double r : radii) {
            const cplx t = ray_point(r, th);
            const double dist = std::abs(t - 1.0);
            const double ax = xi_abs(t);
            mt.add("sin_lower", ax - (2.0 / 3.0) * std::pow(std::sin(th), 1.5), th, r);
            if (dist <= 1.0 && dist > 1e-12) {
                const double q = ax / std::pow(dist, 1.5);
                mt.add("near_lower", q - 2.0 / 3.0, th, r);
                mt.add("near_upper", 2.0 - q, th, r);
            }
            if (dist < 1e-12) continue;
            const double a = xi_arg(t);
            const double ph = phi_of(t);
            interval(mt, "arg_xi", a, -1.5 * ph - 0.5 * th, -1.5 * ph, th, r);
            interval(mt, "minus_phi", -ph, (2.0 / 3.0) * a, (2.0 / 3.0) * a + th / 3.0, th, r);
            const cplx d = dxi_dr(r, th);
            const double lo1 = -pi / 2.0 - th, hi1 = -2.0 * th;
            const double ad = arg_near(d, 0.5 * (lo1 + hi1));
            interval(mt, "arg_dxi_first", ad, lo1, hi1, th, r);
            interval(mt, "arg_dxi_second", ad, -0.5 * ph - 1.5 * th, -0.5 * ph - th, th, r);
            if (th > 0.0) {
                interval(mt, "range", a, -1.5 * pi, -2.0 * th, th, r);
            } else {
                mt.add("theta0_two_values", -std::min(std::abs(a + 1.5 * pi), std::abs(a)), th, r);
            }
            const cplx e2d = std::polar(1.0, 2.0 * th) * d;
            if (a >= -pi - th) {
                const double b = arg_near(e2d, 0.0);
                interval(mt, "dxi_window_wide", b, -pi / 3.0 + th / 6.0, th / 2.0, th, r);
            }
            if (a >= -pi / 2.0 - 2.0 * th) {
                const double b = arg_near(e2d, 0.0);
                interval(mt, "dxi_window_narrow", b, -pi / 6.0 - th / 6.0, th / 2.0, th, r);
            }
        }
        return mt;
    });
    return margins_output("xi_bounds", m, g.margin_tol);
}

// ---------------------------------------------------------------- monotonicity of xi along rays

SuiteOutput suite_xi_monotonicity(const LemmaGrid& g)
{
    const auto radii = g.radii();
    constexpr double h = 1e-6;
    const MarginTracker m = over_thetas(g, [&](double th) {
        MarginTracker mt;
        auto argf = [th](double r) { return xi_arg(ray_point(r, th)); };
        auto absf = [th](double r) { return xi_abs(ray_point(r, th)); };
        for (double r : radii) {
            const cplx t = ray_point(r, th);
            const cplx d = dxi_dr(r, th);
            const cplx e2d = std::polar(1.0, 2.0 * th) * d;
            if (th > 0.0) {
                mt.add("im_e2i_dxi_negative", -e2d.imag(), th, r);
                mt.add("re_e2i_dxi_positive", e2d.real(), th, r);
            } else if (r < 1.0) {
                const cplx x = xi(t, CutSide::lower).principal();
                mt.add("theta0_im_dxi_negative", -d.imag(), th, r);
                mt.add("theta0_re_xi_zero", -std::abs(x.real()), th, r);
            } else if (r > 1.0) {
                const cplx x = xi(t, CutSide::lower).principal();
                mt.add("theta0_im_xi_zero", -std::abs(x.imag()), th, r);
                mt.add("theta0_re_dxi_positive", d.real(), th, r);
            }
            if (std::abs(t - 1.0) < 4.0 * h) continue;
            const double b = xi_arg(t) + 2.0 * th;  // arg(e^{2 i theta} xi)
            const double darg = fd_step(r, h, argf);
            const double dabs = fd_step(r, h, absf);
            if (b > -pi && b < -pi / 2.0 + th) mt.add("darg_positive", darg, th, r);
            if (b >= -1.5 * pi + 2.0 * th && b <= -th / 4.0) mt.add("darg_nonnegative", darg, th, r);
            if (b > -1.5 * pi && b < -pi + th) mt.add("dabs_negative", -dabs, th, r);
            if (b > -pi / 2.0 && b < th) mt.add("dabs_positive", dabs, th, r);
        }
        return mt;
    });
    return margins_output("xi_monotonicity", m, g.margin_tol);
}

// ---------------------------------------------------------------- xi against w, and the second r-derivative of xi

SuiteOutput suite_xi_w(const LemmaGrid& g)
{
    constexpr int na = 61, nr = 250;
    MarginTracker m;
    double sup = 0.0, sup_axis = 0.0;
    long long n = 0, n_axis = 0;
    for (int i = 0; i < na; ++i) {
        const double al = -pi / 2.0 + pi * i / (na - 1);
        for (int k = 1; k <= nr; ++k) {
            const double rho = 10.0 * k / nr;
            const cplx t = std::polar(rho, al);
            if (std::abs(t - 1.0) < 1e-9) continue;
            const double ratio = xi_abs(t) * rho / std::pow(std::abs(t * t - 1.0), 1.5);
            m.add("ratio_below_one", 1.0 - ratio, al, rho);
            sup = std::max(sup, ratio);
            ++n;
            if (i == 0 || i == na - 1) {
                sup_axis = std::max(sup_axis, ratio);
                ++n_axis;
            }
        }
    }
    SuiteOutput out = margins_output("xi_w", m, g.margin_tol, {"ratio_below_one"});
    CheckResult c = check_at_most("xi_w.sup_ratio", "sup_ratio", sup, 1.0, n, "strict: sup must be < 1");
    if (!(sup < 1.0)) c.status = Status::fail;
    out.checks.push_back(c);
    out.checks.push_back(check_at_most("xi_w.imaginary_axis_sup", "sup_ratio", sup_axis, 7.0 / 12.0, n_axis));
    return out;
}

SuiteOutput suite_der_xi(const LemmaGrid& g)
{
    const auto radii = g.radii();
    const MarginTracker m = over_thetas(g, [&](double th) {
        MarginTracker mt;
        for (double r : radii) {
            const cplx t = ray_point(r, th);
            if (std::abs(t - 1.0) < 1e-9) continue;
            const cplx x = xi(t, CutSide::lower).principal();
            const cplx d1 = dxi_dr(r, th), d2 = d2xi_dr2(r, th);
            const double second = 2.0 * std::norm(d1) + 2.0 * (d2 * std::conj(x)).real();
            mt.add("second_derivative_positive", second, th, r);
        }
        return mt;
    });
    return margins_output("der_xi", m, g.margin_tol, {"second_derivative_positive"});
}

// ---------------------------------------------------------------- turning point

SuiteOutput suite_turning_point(const LemmaGrid& g)
{
    const auto radii = g.radii();
    struct Part {
        MarginTracker m;
        double r_star = 0.0;
        double stationarity = 0.0;
    };
    auto parts = parallel_map(g.thetas.size(), g.jobs, [&](std::size_t idx) {
        const double th = g.thetas[idx];
        Part p;
        const SpectralParameter lam(1.0, th);
        const TurningPoint tp = turning_point(lam);
        p.r_star = tp.r_star;
        if (th > 0.0 && tp.r_star > 0.0) p.stationarity = std::abs(dmod2_dr(tp.r_star, th));
        MarginTracker& mt = p.m;
        if (th == 0.0) {
            mt.add("theta0_r_star_one", -std::abs(tp.r_star - 1.0), th, tp.r_star);
            mt.add("theta0_z_star_zero", -std::abs(tp.z_star), th, tp.r_star);
        } else {
            const double az = 4.0 * th / 3.0 + (2.0 / 3.0) * xi_arg(tp.t_star);
            interval(mt, "arg_z_star", az, -pi / 2.0 - th / 2.0, -pi / 2.0 + 5.0 * th / 6.0, th, tp.r_star);
            mt.add("arg_e2i_xi_star", xi_arg(tp.t_star) + 2.0 * th - (-pi + pi / 22.0), th, tp.r_star);
        }
        for (double r : radii) {
            const double dm = dmod2_dr(r, th);
            const cplx e2d = std::polar(1.0, 2.0 * th) * dxi_dr(r, th);
            if (r < tp.r_star - 1e-9) mt.add("decreasing_before", -dm, th, r);
            if (r > tp.r_star + 1e-9) mt.add("increasing_after", dm, th, r);
            mt.add("re_z32_nondecreasing", e2d.real(), th, r);
            if (th > 0.0 && r < tp.r_star) {
                const double b = arg_near(e2d, 0.0);
                interval(mt, "arg_e2i_dxi", b, -pi / 2.0 + th, -pi / 4.0 + 0.75 * th, th, r);
            }
        }
        return p;
    });
    MarginTracker all;
    double sup_r = 0.0, sup_stat = 0.0;
    for (const auto& p : parts) {
        all.merge(p.m);
        sup_r = std::max(sup_r, p.r_star);
        sup_stat = std::max(sup_stat, p.stationarity);
    }
    SuiteOutput out = margins_output("turning_point", all, g.margin_tol);
    const auto n = static_cast<long long>(g.thetas.size());
    out.checks.push_back(check_at_most("turning_point.r_star_bound", "sup_r_star", sup_r, std::sqrt(2.0) + 1e-12, n));
    out.checks.push_back(check_at_most("turning_point.stationarity", "sup_abs_derivative", sup_stat, 1e-10, n));
    return out;
}

// ---------------------------------------------------------------- geometry of Gamma_lambda

SuiteOutput suite_gamma_geometry(const LemmaGrid& g)
{
    const auto radii = g.radii();
    struct Part {
        MarginTracker m;
        double length_constant = 0.0;
    };
    auto parts = parallel_map(g.lambdas.size(), g.jobs, [&](std::size_t idx) {
        const SpectralParameter& lam = g.lambdas[idx];
        const double th = lam.theta;
        const double l23 = std::pow(lam.modulus, 2.0 / 3.0);
        const double rad = std::pow(3.0 * pi * lam.modulus / 8.0, 2.0 / 3.0);
        Part p;
        MarginTracker& mt = p.m;
        const TurningPoint tp = turning_point(lam);
        const double sl = std::sqrt(lam.modulus);
        for (double r : radii) {
            const double x = sl * r;
            const BranchedComplex zb = z_of_x_branched(x, lam);
            const cplx z = zb.value();
            const double az = zb.arg;
            const bool minus = r <= tp.r_star, plus = r >= tp.r_star;
            if (th == 0.0) {
                mt.add("theta0_real_axis", -std::abs(z.imag()) / (1.0 + std::abs(z)), th, r);
                if (minus) interval(mt, "theta0_gamma_minus_segment", z.real() / rad, -1.0, 0.0, th, r);
                if (plus) mt.add("theta0_gamma_plus_ray", z.real() / (1.0 + std::abs(z)), th, r);
            } else {
                interval(mt, "gamma_sector", az, -pi + 4.0 * th / 3.0, 0.0, th, r);
                if (minus) interval(mt, "gamma_minus_sector", az, -pi + 4.0 * th / 3.0, -pi / 2.0 + 5.0 * th / 6.0, th, r);
                if (plus) interval(mt, "gamma_plus_sector", az, -pi / 2.0 - th / 2.0, 0.0, th, r);
                if (lam.arg() <= g.delta) {
                    if (minus) interval(mt, "small_arg_gamma_minus", az, -pi, -5.0 * pi / 12.0, th, r);
                    if (plus) interval(mt, "small_arg_gamma_plus", az, -pi / 2.0 - pi / 20.0, 0.0, th, r);
                }
            }
            mt.add("inf_modulus", std::abs(z) / l23 - std::sin(th), th, r);
            if (minus) mt.add("gamma_minus_disk", 1.0 - std::abs(z) / rad, th, r);
        }
        const double len = gamma_integral(lam, 0.0, tp.x_star.real(), 0.0, GammaIntegralKind::power);
        p.length_constant = len / l23;
        return p;
    });
    MarginTracker all;
    double sup_c = 0.0;
    for (const auto& p : parts) {
        all.merge(p.m);
        sup_c = std::max(sup_c, p.length_constant);
    }
    SuiteOutput out = margins_output("gamma_geometry", all, g.margin_tol);
    out.checks.push_back(check_at_most("gamma_geometry.gamma_minus_length", "sup_length_over_l23", sup_c, 5.0, static_cast<long long>(g.lambdas.size())));
    return out;
}

// ---------------------------------------------------------------- integrals along Upsilon

SuiteOutput suite_upsilon_integrals(const LemmaGrid& g)
{
    const double delta = g.delta;
    std::vector<cplx> anchors;
    const double amax = pi - 2.0 * delta / 3.0;
    for (double mod : {0.05, 0.3, 1.0, 3.0, 10.0, 30.0})
        for (int k = 0; k < 25; ++k) anchors.push_back(std::polar(mod, -amax + 2.0 * amax * k / 24.0));
    struct Part {
        MarginTracker m;
        double exp_c[3] = {0.0, 0.0, 0.0};
        double pow_c[3] = {0.0, 0.0, 0.0};
    };
    const double alphas_exp[3] = {0.0, 1.0, 2.0};
    const double alphas_pow[3] = {1.5, 2.0, 3.0};
    auto parts = parallel_map(anchors.size(), g.jobs, [&](std::size_t idx) {
        const cplx z = anchors[idx];
        Part p;
        MarginTracker& mt = p.m;
        const double ph = choose_phi(z, delta);
        const double az = std::arg(z), mz = std::abs(z);
        mt.add("phi_bound", pi / 3.0 - delta / 3.0 - std::abs(ph), az, mz);
        mt.add("phi_reach", 2.0 * pi / 3.0 - delta / 3.0 - std::abs(detail::wrap_pi(az - ph)), az, mz);
        const UpsilonContour c = detail::upsilon_frame(z, ph);
        const double scale = 1.0 + std::abs(c.x0);
        for (double f : {0.1, 1.0, 10.0}) {
            const double dt = f * scale;
            const cplx w = c.point(c.x0 + dt);
            const UpsilonContour cw = detail::upsilon_frame(w, ph);
            mt.add("nested_same_level", -std::abs(cw.y - c.y) / (1.0 + std::abs(c.y)), az, mz);
            mt.add("nested_later_start", -std::abs(cw.x0 - (c.x0 + dt)) / (scale + dt), az, mz);
            if (std::abs(ph) < pi / 3.0) {
                const cplx lhs = std::pow(w, 1.5) - std::pow(z, 1.5);
                const cplx e = std::polar(1.0, -ph);
                const double rhs = std::cos(1.5 * ph) * (std::pow(w * e, 1.5) - std::pow(z * e, 1.5)).real();
                mt.add("identity", -std::abs(lhs.real() - rhs) / (1.0 + std::abs(lhs)), az, mz);
                mt.add("monotone", lhs.real(), az, mz);
            }
        }
        for (int i = 0; i < 3; ++i) {
            const double a = alphas_exp[i];
            p.exp_c[i] = upsilon_integral(z, ph, a, UpsilonIntegralKind::exp_decay) * std::pow(1.0 + mz, a + 0.5);
            const double b = alphas_pow[i];
            p.pow_c[i] = upsilon_integral(z, ph, b, UpsilonIntegralKind::power) * (b - 1.0) / 2.0;
        }
        return p;
    });
    MarginTracker all;
    double exp_c[3] = {0, 0, 0}, pow_c[3] = {0, 0, 0};
    for (const auto& p : parts) {
        all.merge(p.m);
        for (int i = 0; i < 3; ++i) {
            exp_c[i] = std::max(exp_c[i], p.exp_c[i]);
            pow_c[i] = std::max(pow_c[i], p.pow_c[i]);
        }
    }
    SuiteOutput out = margins_output("upsilon_integrals", all, g.margin_tol);
    const auto n = static_cast<long long>(anchors.size());
    const char* exp_names[3] = {"upsilon_integrals.exp_alpha_0", "upsilon_integrals.exp_alpha_1", "upsilon_integrals.exp_alpha_2"};
    const char* pow_names[3] = {"upsilon_integrals.power_alpha_1.5", "upsilon_integrals.power_alpha_2", "upsilon_integrals.power_alpha_3"};
    for (int i = 0; i < 3; ++i) {
        out.checks.push_back(check_at_most(exp_names[i], "sup_C_delta", exp_c[i], 10.0, n));
        out.checks.push_back(check_at_most(pow_names[i], "sup_over_2_div_alpha_minus_1", pow_c[i], 1.0, n));
    }
    return out;
}

// ---------------------------------------------------------------- parametrisations of Gamma_lambda

SuiteOutput suite_gamma_parametrization(const LemmaGrid& g)
{
    const double delta = g.delta;
    const std::vector<double> args{0.0, delta / 2, delta, pi / 4, pi / 3, pi / 2, 2 * pi / 3, 3 * pi / 4, pi - delta, pi};
    struct Part {
        MarginTracker m;
        double c1 = 0.0, c2 = 0.0, slope_b = 0.0;
    };
    auto parts = parallel_map(args.size(), g.jobs, [&](std::size_t idx) {
        const double al = args[idx];
        const double th = 0.5 * al;
        Part p;
        MarginTracker& mt = p.m;
        const SpectralParameter lam(1.0, th);
        auto f = [th](double r) { return std::polar(1.0, 2.0 * th) * xi(ray_point(r, th), CutSide::lower).principal(); };
        const TurningPoint tp = turning_point(lam);
        const double k0 = f(0.0).real(), ks = f(tp.r_star).real();
        // kappa_1 > 0 with v(kappa_1) = -kappa_1
        double rhi = 2.0;
        while (f(rhi).real() <= 0.0) rhi *= 2.0;
        const double ra = f(0.0).real() >= 0.0 ? 0.0 : bisect([&](double r) { return f(r).real(); }, 0.0, rhi);
        double r1 = ra;
        if (f(ra).imag() < 0.0) {
            double rb = std::max(2.0, 2.0 * ra);
            while ((f(rb).real() + f(rb).imag()) <= 0.0) rb *= 2.0;
            r1 = bisect([&](double r) { return f(r).real() + f(r).imag(); }, ra, rb);
        }
        const double k1 = std::max(0.0, f(r1).real());
        interval(mt, "kappa_star_in_range", ks, k0, k1, th, tp.r_star);
        const double zs = std::abs(f(tp.r_star));  // |z_*|^{3/2} up to the common factor 3|lambda|/2
        const double vs = std::abs(f(tp.r_star).imag());
        constexpr int n = 400;
        for (int i = 0; i <= n; ++i) {
            const double r = r1 * i / n;
            const cplx fr = f(r);
            if (al >= delta) p.c1 = std::max(p.c1, std::pow(std::abs(fr) / zs, 2.0 / 3.0));
            if (al > 0.0 && al <= delta && r >= tp.r_star) p.c2 = std::max(p.c2, std::abs(fr) / vs);
        }
        const double cot_half = 1.0 / std::tan(delta / 2.0);
        for (int i = 0; i <= 2000; ++i) {
            const double r = r1 + (10.0 - r1) * i / 2000.0;
            const cplx fr = f(r);
            if (fr.real() > 0.0) mt.add("power_bound", 1.0 - std::abs(fr) / (std::sqrt(2.0) * fr.real()), th, r);
        }
        for (int i = 0; i <= 2000; ++i) {
            const double r = 10.0 * i / 2000.0;
            const double b = arg_near(std::polar(1.0, 2.0 * th) * dxi_dr(r, th), 0.0);
            const double slope = std::abs(std::tan(b));
            if (al >= delta) mt.add("slope_case_a", cot_half - slope, th, r);
            else if (r >= tp.r_star) p.slope_b = std::max(p.slope_b, slope);
            if (al <= delta && r <= tp.r_star && std::abs(std::tan(b)) > 0.0) mt.add("chi_slope", std::sqrt(3.0) - 1.0 / slope, th, r);
            if (al <= delta && r <= tp.r_star && std::abs(std::tan(b)) == 0.0) mt.add("chi_slope", std::sqrt(3.0), th, r);
        }
        return p;
    });
    MarginTracker all;
    double c1 = 0, c2 = 0, sb = 0;
    for (const auto& p : parts) {
        all.merge(p.m);
        c1 = std::max(c1, p.c1);
        c2 = std::max(c2, p.c2);
        sb = std::max(sb, p.slope_b);
    }
    SuiteOutput out = margins_output("gamma_parametrization", all, g.margin_tol);
    const auto n = static_cast<long long>(args.size());
    out.checks.push_back(check_at_most("gamma_parametrization.modulus_over_z_star", "sup_C", c1, 10.0, n));
    out.checks.push_back(check_at_most("gamma_parametrization.modulus_over_im_z_star", "sup_C", c2, 10.0, n));
    out.checks.push_back(check_at_most("gamma_parametrization.slope_case_b", "sup_abs_dv_dkappa", sb, 10.0, n));
    return out;
}

// ---------------------------------------------------------------- round trip

SuiteOutput suite_round_trip(const LemmaGrid& g)
{
    auto parts = parallel_map(g.lambdas.size(), g.jobs, [&](std::size_t idx) {
        const SpectralParameter& lam = g.lambdas[idx];
        MarginTracker mt;
        const double sl = std::sqrt(lam.modulus);
        std::vector<cplx> xs;
        for (int i = 1; i <= 200; ++i) xs.push_back(sl * 10.0 * i / 200.0);
        for (double rho : {0.3, 0.9, 1.5, 3.0})
            for (double b : {0.2, 0.6, 1.0, 1.4}) {
                const cplx t = std::polar(rho, -b);  // t in S[-pi/2, 0]
                if (in_DT(t)) xs.push_back(t * lam.sqrt());
            }
        for (const cplx& x : xs) {
            double err;
            try {
                const cplx z = z_of_x(x, lam);
                err = std::abs(x_of_z(z, lam) - x) / (1.0 + std::abs(x));
            } catch (const Error&) {
                err = 1.0;
            }
            mt.add("x_of_z_after_z_of_x", 1e-10 - err, lam.theta, std::abs(x));
        }
        return mt;
    });
    MarginTracker all;
    for (const auto& p : parts) all.merge(p);
    return margins_output("round_trip", all, 0.0);
}

// ---------------------------------------------------------------- domain containment

SuiteOutput suite_domain_containment(const LemmaGrid& g)
{
    const double delta = g.delta;
    const double eps = select_epsilon(delta);
    auto parts = parallel_map(g.lambdas.size(), g.jobs, [&](std::size_t idx) {
        const SpectralParameter& lam = g.lambdas[idx];
        MarginTracker mt;
        const double al = lam.arg();
        const TurningPoint tp = turning_point(lam);
        const double xs = tp.x_star.real();
        const DomainSpec dz(DomainKind::DZdelta, lam, delta, eps);
        for (SolutionVariant v : all_variants) {
            const auto dom = theorem_domain_spec(v, lam, delta, eps);
            if (!dom) continue;
            const std::string name = std::string("in_particular_") + variant_name(v);
            const double xmax = 8.0 * std::sqrt(lam.modulus);
            for (int i = 0; i <= 400; ++i) {
                const double x = xmax * i / 400.0;
                if (!in_particular_range(v, al, x, xs, delta)) continue;
                const cplx z = z_of_x(x, lam);
                if (std::abs(z) < 1e-12) continue;
                mt.add(name, in_domain(*dom, z) ? 0.0 : -1.0, lam.theta, x);
            }
            // seeded fuzz: D_nu^delta must sit inside D_Z^delta
            std::mt19937_64 rng(g.seed + 7919ull * idx + static_cast<unsigned>(v));
            std::uniform_real_distribution<double> ur(0.0, 1.0);
            const double R = 4.0 * std::pow(lam.modulus, 2.0 / 3.0);
            for (int k = 0; k < 1500; ++k) {
                const cplx z = std::polar(R * std::sqrt(ur(rng)) + 1e-9, -pi + 2.0 * pi * ur(rng));
                const bool bad = in_domain(*dom, z) && !in_domain(dz, z);
                mt.add(std::string("subset_of_dz_delta_") + variant_name(v), bad ? -1.0 : 0.0, lam.theta, std::abs(z));
            }
        }
        return mt;
    });
    MarginTracker all;
    for (const auto& p : parts) all.merge(p);
    return margins_output("domain_containment", all, 0.0);
}

SuiteOutput run_all_suites(const LemmaGrid& g)
{
    SuiteOutput out;
    append(out, suite_xi_bounds(g));
    append(out, suite_xi_monotonicity(g));
    append(out, suite_xi_w(g));
    append(out, suite_der_xi(g));
    append(out, suite_turning_point(g));
    append(out, suite_gamma_geometry(g));
    append(out, suite_upsilon_integrals(g));
    append(out, suite_gamma_parametrization(g));
    append(out, suite_round_trip(g));
    append(out, suite_domain_containment(g));
    return out;
}

} // namespace pcf::harness
