#ifndef PCF_BOUNDS_HPP
#define PCF_BOUNDS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "domains.hpp"
#include "specfun.hpp"

namespace pcf {

enum class SolutionVariant { zero, plus, minus, star };

inline const char* variant_name(SolutionVariant v)
{
    switch (v) {
    case SolutionVariant::zero: return "0";
    case SolutionVariant::plus: return "+";
    case SolutionVariant::minus: return "-";
    case SolutionVariant::star: return "*";
    }
    return "?";
}

inline std::optional<SolutionVariant> parse_variant(const std::string& s)
{
    if (s == "0") return SolutionVariant::zero;
    if (s == "+" || s == "plus") return SolutionVariant::plus;
    if (s == "-" || s == "minus") return SolutionVariant::minus;
    if (s == "*" || s == "star") return SolutionVariant::star;
    return std::nullopt;
}

inline constexpr SolutionVariant all_variants[] = {SolutionVariant::zero, SolutionVariant::plus, SolutionVariant::minus, SolutionVariant::star};

// ---------------------------------------------------------------- phi, rho

/** \brief log phi(mu) where mu = |mu| e^{i a} is given with an explicit argument. */
inline cplx log_phi(double modulus, double a)
{
    const cplx mu = std::polar(modulus, a);
    const cplx logmu(std::log(modulus), a);
    return 0.75 * std::log(2.0) + 0.5 * std::log(pi) + 0.25 * mu * (logmu - std::log(2.0) - 1.0);
}

/** \brief phi(lambda) = 2^{3/4} sqrt(pi) (lambda / 2e)^{lambda/4}, principal branch. */
inline cplx phi_of(cplx lam)
{
    if (lam.imag() == 0.0 && lam.real() <= 0.0) fail(ErrorKind::branch, "phi is cut along (-inf, 0]");
    return std::exp(log_phi(std::abs(lam), std::arg(lam)));
}

inline cplx log_phi_lambda(const SpectralParameter& lam) { return log_phi(lam.modulus, lam.arg()); }
/** \brief log phi(-lambda) with arg(-lambda) = arg lambda - pi. */
inline cplx log_phi_minus_lambda(const SpectralParameter& lam) { return log_phi(lam.modulus, lam.arg() - pi); }
inline cplx phi_lambda(const SpectralParameter& lam) { return std::exp(log_phi_lambda(lam)); }
inline cplx phi_minus_lambda(const SpectralParameter& lam) { return std::exp(log_phi_minus_lambda(lam)); }

inline double rho(double x, const SpectralParameter& lam)
{
    const double m = std::abs(x * x - lam.value());
    return (1.0 + std::sqrt(lam.modulus) + std::sqrt(m)) / (1.0 + std::pow(lam.modulus, 5.0 / 12.0) + std::pow(m, 1.25));
}

inline double rho0(double x, const SpectralParameter& lam)
{
    return 1.0 + std::pow(lam.modulus, 1.0 / 12.0) + std::pow(std::abs(x * x - lam.value()), 0.25);
}

/** \brief sqrt(x^2 - lambda), analytic on R_+ with arg -> 0 at infinity; lambda + i0 for real lambda. */
inline cplx sqrt_x2_minus_lambda(double x, const SpectralParameter& lam)
{
    cplx w = x * x - lam.value();
    // x^2 - lambda stays in the closed lower half-plane; pin the real case to the lower side.
    if (w.imag() >= 0.0) w.imag(-0.0);
    return std::sqrt(w);
}

// ---------------------------------------------------------------- rotated psi

/** \brief Rotation data: variant nu uses psi(c x, mu). */
struct PsiRotation {
    cplx c;
    cplx mu;
};

inline PsiRotation psi_rotation(SolutionVariant v, const SpectralParameter& lam)
{
    const cplx l = lam.value();
    switch (v) {
    case SolutionVariant::zero: return {1.0, l};
    case SolutionVariant::plus: return {cplx(0.0, 1.0), -l};
    case SolutionVariant::minus: return {cplx(0.0, -1.0), -l};
    case SolutionVariant::star: return {-1.0, l};
    }
    return {1.0, l};
}

/** \brief psi(c x, mu) and psi'(c x, mu) (derivative in the psi argument) in log-scaled form. */
inline ScaledSolution psi_rotated(cplx x, const SpectralParameter& lam, SolutionVariant v)
{
    if (!lam.valid()) fail(ErrorKind::domain, "|lambda| >= 1/2 required");
    const PsiRotation r = psi_rotation(v, lam);
    return psi_scaled(r.c * x, r.mu);
}

/** \brief Multiplier of sqrt(x^2 - lambda) in the F expression of each variant. */
inline cplx f_multiplier(SolutionVariant v)
{
    return v == SolutionVariant::plus || v == SolutionVariant::minus ? cplx(0.0, 1.0) : cplx(1.0, 0.0);
}

/** \brief log F for the variant's expression (complex log; real part is log |F|). */
inline cplx f_expression_log(double x, const SpectralParameter& lam, SolutionVariant v)
{
    const ScaledSolution s = psi_rotated(x, lam, v);
    const cplx inner = s.dy + f_multiplier(v) * s.y * sqrt_x2_minus_lambda(x, lam);
    if (inner == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
    return s.log_scale + std::log(inner);
}

inline cplx f_expression(double x, const SpectralParameter& lam, SolutionVariant v) { return std::exp(f_expression_log(x, lam, v)); }

/** \brief log of the envelope with C = 1. */
inline double estimate_log_rhs(double x, const SpectralParameter& lam, SolutionVariant v)
{
    const cplx l = lam.value();
    const cplx lxi = l * xi(t_of_x(x, lam), CutSide::lower).principal();
    const double lr = std::log(rho(x, lam));
    const cplx shift(0.0, -0.5 * pi);  // log e^{-i pi lambda / 2} = -i pi lambda / 2
    switch (v) {
    case SolutionVariant::zero: return (log_phi_lambda(lam) - lxi).real() + lr;
    case SolutionVariant::plus: return (log_phi_minus_lambda(lam) + shift * l + lxi).real() + lr;
    case SolutionVariant::minus: return (log_phi_minus_lambda(lam) - lxi).real() + lr;
    case SolutionVariant::star: return (log_phi_lambda(lam) + shift * l + lxi).real() + lr;
    }
    return 0.0;
}

inline double estimate_rhs(double x, const SpectralParameter& lam, SolutionVariant v) { return std::exp(estimate_log_rhs(x, lam, v)); }

// ---------------------------------------------------------------- estimate records

struct EstimateRecord {
    double x = 0.0;
    SpectralParameter lambda;
    SolutionVariant variant = SolutionVariant::zero;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool in_domain = false;
    std::string error;
};

inline DomainKind theorem_domain(SolutionVariant v)
{
    switch (v) {
    case SolutionVariant::zero: return DomainKind::D0;
    case SolutionVariant::plus: return DomainKind::Dplus;
    case SolutionVariant::minus: return DomainKind::Dminus;
    case SolutionVariant::star: return DomainKind::Dstar;
    }
    return DomainKind::D0;
}

/** \brief Whether the theorem's arg lambda range admits the variant. */
inline bool variant_admits_lambda(SolutionVariant v, const SpectralParameter& lam, double delta)
{
    const double a = lam.arg();
    if (v == SolutionVariant::plus) return a <= pi - delta + 1e-14;
    if (v == SolutionVariant::star) return a >= delta - 1e-14;
    return true;
}

/** \brief The matching D_nu^delta(lambda), or nothing when lambda is outside the variant's range. */
inline std::optional<DomainSpec> theorem_domain_spec(SolutionVariant v, const SpectralParameter& lam, double delta, double eps)
{
    if (!variant_admits_lambda(v, lam, delta)) return std::nullopt;
    return DomainSpec(theorem_domain(v), lam, delta, eps);
}

/** \brief One envelope sample; the ratio is formed in log space. */
inline EstimateRecord estimate_record(double x, const SpectralParameter& lam, SolutionVariant v, const std::optional<DomainSpec>& dom)
{
    EstimateRecord r;
    r.x = x;
    r.lambda = lam;
    r.variant = v;
    try {
        const double ll = f_expression_log(x, lam, v).real();
        const double lr = estimate_log_rhs(x, lam, v);
        r.lhs = std::exp(ll);
        r.rhs = std::exp(lr);
        r.ratio = std::exp(ll - lr);
        if (dom) {
            const cplx z = z_of_x(x, lam);
            r.in_domain = z != 0.0 && in_domain(*dom, z);
        }
    } catch (const Error& e) {
        r.error = e.what();
    }
    return r;
}

inline std::vector<EstimateRecord> estimate_sweep(const std::vector<double>& xs, const std::vector<SpectralParameter>& lambdas, SolutionVariant v,
                                                  double delta, std::optional<double> eps = std::nullopt)
{
    const double e = eps ? *eps : select_epsilon(delta);
    std::vector<EstimateRecord> out;
    out.reserve(xs.size() * lambdas.size());
    for (const auto& lam : lambdas) {
        const auto dom = theorem_domain_spec(v, lam, delta, e);
        for (double x : xs) out.push_back(estimate_record(x, lam, v, dom));
    }
    return out;
}

/** \brief Olver ratios |psi| rho0 / |phi e^{-lambda xi}| and |psi'| / (rho0 |phi e^{-lambda xi}|). */
inline std::pair<double, double> olver_ratio(double x, const SpectralParameter& lam)
{
    const ScaledSolution s = psi_rotated(x, lam, SolutionVariant::zero);
    const cplx lxi = lam.value() * xi(t_of_x(x, lam), CutSide::lower).principal();
    const double le = (log_phi_lambda(lam) - lxi).real();
    const double r0 = rho0(x, lam);
    const double base = s.log_scale.real() - le;
    return {std::exp(base + std::log(std::abs(s.y) * r0)), std::exp(base + std::log(std::abs(s.dy) / r0))};
}

// ---------------------------------------------------------------- A_nu, a_nu

/** \brief log of the constant K_nu in psi(c x, mu) = K_nu A_nu(z_lambda(x)) / sqrt(z'_lambda(x)). */
inline cplx log_identification_constant(SolutionVariant v, const SpectralParameter& lam)
{
    const cplx l = lam.value();
    const cplx lp = log_phi_lambda(lam);
    const double l2p = 1.5 * std::log(2.0) + std::log(pi);
    const cplx i(0.0, 1.0);
    switch (v) {
    case SolutionVariant::zero: return lp;
    case SolutionVariant::plus: return l2p - lp - i * pi / 12.0 - i * pi * l / 4.0;
    case SolutionVariant::minus: return l2p - lp + i * pi / 12.0 + i * pi * l / 4.0;
    case SolutionVariant::star:
        if (lam.theta == 0.0) fail(ErrorKind::domain, "A_* identification needs arg lambda > 0");
        return lp + i * pi / 6.0 - i * pi * l / 2.0;
    }
    return lp;
}

/** \brief Rotation r with a_nu = e^{2/3 (r z)^{3/2}} A_nu. */
inline cplx a_rotation(SolutionVariant v)
{
    switch (v) {
    case SolutionVariant::zero: return 1.0;
    case SolutionVariant::plus: return omega;
    case SolutionVariant::minus: return omega_bar;
    case SolutionVariant::star: return omega;
    }
    return 1.0;
}

/** \brief w^{3/2}, principal, with the lower side taken on the negative axis. */
inline cplx pow32_lower(cplx w)
{
    if (w == 0.0) return 0.0;
    return std::polar(std::pow(std::abs(w), 1.5), 1.5 * arg_side(w, CutSide::lower));
}

struct ANuValue {
    cplx z;
    cplx x;
    cplx a;   ///< a_nu(z)
    cplx da;  ///< d a_nu / dz
    cplx A;   ///< A_nu(z)
    cplx dA;  ///< d A_nu / dz
};

/**
 * \brief A_nu and a_nu at z = z_lambda(x) from the psi oracle, with exact z-derivatives.
 *
 * A = g sqrt(z') / K with g(x) = psi(c x, mu); dA/dz = (g'/sqrt(z') + g z''/(2 z'^{3/2})) / K.
 */
inline ANuValue a_nu_from_psi(cplx x, const SpectralParameter& lam, SolutionVariant v)
{
    const PsiRotation rot = psi_rotation(v, lam);
    const ScaledSolution s = psi_rotated(x, lam, v);
    const cplx zp = dz_dx(x, lam);
    const cplx zpp = d2z_dx2(x, lam);
    const cplx sq = std::sqrt(zp);
    const cplx logk = log_identification_constant(v, lam);
    const cplx g = s.y, gp = rot.c * s.dy;  // scaled by exp(log_scale)
    const cplx Ay = g * sq;
    const cplx dAy = gp / sq + g * zpp / (2.0 * zp * sq);
    ANuValue out;
    out.x = x;
    out.z = detail::on_real_axis(x) && x.real() >= 0.0 ? z_of_x(x, lam) : lam.pow23().value() * eta(t_of_x(x, lam));
    const cplx r = a_rotation(v);
    const cplx zeta = pow32_lower(r * out.z);
    const cplx rz12 = out.z == 0.0 ? cplx(0.0) : zeta / (r * out.z);  // (r z)^{1/2} on the same sheet
    const cplx la = s.log_scale - logk;
    out.A = std::exp(la) * Ay;
    out.dA = std::exp(la) * dAy;
    const cplx lsmall = la + (2.0 / 3.0) * zeta;
    out.a = std::exp(lsmall) * Ay;
    out.da = std::exp(lsmall) * (dAy + r * rz12 * Ay);
    return out;
}

/** \brief a_nu_from_psi at a z-plane point, through x = x_lambda(z). */
inline ANuValue a_nu_at_z(cplx z, const SpectralParameter& lam, SolutionVariant v, std::optional<cplx> x_guess = std::nullopt)
{
    ANuValue out = a_nu_from_psi(x_of_z(z, lam, x_guess), lam, v);
    out.z = z;
    // recompute the multiplier with the requested z (x_of_z round-trips to ~1e-14)
    const cplx r = a_rotation(v);
    const cplx zeta = pow32_lower(r * z);
    const cplx rz12 = z == 0.0 ? cplx(0.0) : zeta / (r * z);
    out.a = std::exp((2.0 / 3.0) * zeta) * out.A;
    out.da = std::exp((2.0 / 3.0) * zeta) * (out.dA + r * rz12 * out.A);
    return out;
}

// ---------------------------------------------------------------- connection formulas, Wronskians

/** \brief K = 2 sqrt(pi) / phi(lambda)^2 Gamma((lambda + 1)/2). */
inline cplx connection_K(const SpectralParameter& lam)
{
    return std::exp(std::log(2.0 * std::sqrt(pi)) - 2.0 * log_phi_lambda(lam) + lgamma_complex(0.5 * (lam.value() + 1.0)));
}

struct NamedResidual {
    std::string name;
    cplx value;
    cplx expected;
    double residual;
};

/** \brief psi(+-ix, -lambda) and psi(+-x, lambda) relations; residual relative to the largest term. */
inline std::vector<NamedResidual> psi_connection_residuals(double x, const SpectralParameter& lam)
{
    const cplx l = lam.value();
    const cplx i(0.0, 1.0);
    auto P = [&](cplx w, cplx mu) { return psi_complex(w, mu).psi; };
    const cplx px = P(x, l), pmx = P(-x, l), pix = P(i * x, -l), pmix = P(-i * x, -l);
    const cplx g1 = std::exp(lgamma_complex(0.5 * (1.0 - l))) / std::sqrt(2.0 * pi);
    const cplx g2 = std::exp(lgamma_complex(0.5 * (1.0 + l))) / std::sqrt(2.0 * pi);
    const cplx e1 = std::exp(i * pi / 4.0 * (l + 1.0)), e2 = std::exp(i * pi / 4.0 * (l - 1.0));
    std::vector<NamedResidual> out;
    auto add = [&](const char* name, cplx lhs, cplx t1, cplx t2) {
        const cplx rhs = t1 + t2;
        const double den = std::max({std::abs(lhs), std::abs(t1), std::abs(t2)});
        out.push_back({name, lhs, rhs, std::abs(lhs - rhs) / den});
    };
    add("ix_plus", pix, g1 * e1 * px, g1 / e1 * pmx);
    add("ix_minus", pmix, g1 * e1 * pmx, g1 / e1 * px);
    add("x_plus", px, g2 * e2 * pix, g2 / e2 * pmix);
    add("x_minus", pmx, g2 * e2 * pmix, g2 / e2 * pix);
    return out;
}

struct AllA {
    ANuValue v0, vp, vm, vs;
};

inline AllA all_A_at_z(cplx z, const SpectralParameter& lam)
{
    const cplx x = x_of_z(z, lam);
    auto at = [&](SolutionVariant v) {
        ANuValue a = a_nu_from_psi(x, lam, v);
        a.z = z;
        return a;
    };
    return {at(SolutionVariant::zero), at(SolutionVariant::plus), at(SolutionVariant::minus), at(SolutionVariant::star)};
}

inline cplx wronskian(const ANuValue& f, const ANuValue& g) { return f.A * g.dA - f.dA * g.A; }

/** \brief The six pairwise Wronskian identities for 0 < arg lambda < pi. */
inline std::vector<NamedResidual> wronskian_check(const SpectralParameter& lam, cplx probe_z)
{
    if (!(lam.theta > 0.0 && lam.theta < pi / 2.0)) fail(ErrorKind::domain, "Wronskian identities need 0 < arg lambda < pi");
    const AllA a = all_A_at_z(probe_z, lam);
    const cplx l = lam.value();
    const cplx i(0.0, 1.0);
    const cplx K = connection_K(lam);
    const double tp = 2.0 * pi;
    std::vector<NamedResidual> out;
    auto add = [&](const char* name, cplx w, cplx e) { out.push_back({name, w, e, std::abs(w - e) / std::abs(e)}); };
    add("W{A0,A+}", wronskian(a.v0, a.vp), std::exp(-i * pi / 6.0) / tp);
    add("W{A0,A-}", wronskian(a.v0, a.vm), std::exp(i * pi / 6.0) / tp);
    add("W{A*,A+}", wronskian(a.vs, a.vp), -std::exp(i * pi / 6.0) * std::exp(i * pi * l) / tp);
    add("W{A*,A-}", wronskian(a.vs, a.vm), std::exp(i * pi / 2.0) / tp);
    add("W{A0,A*}", wronskian(a.v0, a.vs), std::exp(-i * pi / 6.0) / pi * std::exp(i * pi * l / 2.0) * std::cos(pi * l / 2.0) * K);
    add("W{A-,A+}", wronskian(a.vm, a.vp), std::exp(-i * pi / 2.0) / tp / K);
    return out;
}

/** \brief Residuals of the four A_nu connection formulas (upper signs, arg lambda > 0). */
inline std::vector<NamedResidual> connection_check_A(const SpectralParameter& lam, cplx probe_z)
{
    if (!(lam.theta > 0.0 && lam.theta < pi / 2.0)) fail(ErrorKind::domain, "connection formulas need 0 < arg lambda < pi");
    const AllA a = all_A_at_z(probe_z, lam);
    const cplx l = lam.value();
    const cplx i(0.0, 1.0);
    const cplx K = connection_K(lam);
    const cplx em = std::exp(-i * pi / 3.0), ep = std::exp(i * pi / 3.0);
    const cplx pre = std::exp(-i * pi * l / 2.0) / (2.0 * std::cos(pi * l / 2.0)) / K;
    std::vector<NamedResidual> out;
    auto add = [&](const char* name, cplx lhs, cplx t1, cplx t2) {
        const cplx rhs = t1 + t2;
        const double den = std::max({std::abs(lhs), std::abs(t1), std::abs(t2)});
        out.push_back({name, lhs, rhs, std::abs(lhs - rhs) / den});
    };
    add("A0", a.v0.A, K * em * a.vp.A, K * ep * a.vm.A);
    add("A+", a.vp.A, pre * std::exp(i * pi * l) * ep * a.v0.A, pre * a.vs.A);
    add("A-", a.vm.A, pre * ep * a.vs.A, pre * em * a.v0.A);
    add("A*", a.vs.A, K * std::exp(i * pi * l) * em * a.vm.A, K * a.vp.A);
    return out;
}

} // namespace pcf

#endif
