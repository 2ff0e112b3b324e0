"""Reference values from mpmath, written as C++ initializers to values.inc.

Run: python3 gen_values.py > values.inc
"""
import mpmath as mp

mp.mp.dps = 40


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 17, min_fixed=-300, max_fixed=300), mp.nstr(z.imag, 17, min_fixed=-300, max_fixed=300))


def r(x):
    return mp.nstr(mp.mpf(x), 17)


def psi(w, mu):
    return mp.pcfu(-mu / 2, w * mp.sqrt(2))


def dpsi(w, mu):
    return mp.diff(lambda s: psi(s, mu), w)


def xi(t):
    f = lambda s: mp.sqrt(s - 1) * mp.sqrt(s + 1)
    return mp.quad(f, [1, t])


out = []
out.append("// Generated by gen_values.py (mpmath, 40 digits). Do not edit.")

airy_z = [0.3j, 1 + 0.5j, -2.5 + 1j, 4 - 3j, -7 + 0.2j, 9 + 9j, 14 - 2j, -13 + 4j]
out.append("struct AiryRef { cplx z, ai, aip; };")
out.append("inline const AiryRef airy_ref[] = {")
for z in airy_z:
    out.append("    {%s, %s, %s}," % (c(z), c(mp.airyai(z)), c(mp.airyai(z, 1))))
out.append("};")

out.append("struct BiRef { cplx z, bi; };")
out.append("inline const BiRef bi_ref[] = {")
for z in [0.5 + 0.5j, -3 + 1j, 2 - 1j]:
    out.append("    {%s, %s}," % (c(z), c(mp.airybi(z))))
out.append("};")

out.append("struct GammaRef { cplx w, g; };")
out.append("inline const GammaRef gamma_ref[] = {")
for w in [0.5, 1.5 + 2j, -2.5 + 0.3j, 7 - 4j, 0.1 + 20j]:
    out.append("    {%s, %s}," % (c(w), c(mp.gamma(w))))
out.append("};")

# psi(x, lambda) for real x: (x, |lambda|, arg lambda)
out.append("struct PsiRef { double x, modulus, arg; cplx psi, dpsi; };")
out.append("inline const PsiRef psi_ref[] = {")
for m, a in [(1, 0), (3, 0), (2, mp.pi / 4), (2, mp.pi / 2), (4, mp.pi / 3), (4, 9 * mp.pi / 10), (10, 0), (10, mp.pi / 6)]:
    lam = mp.mpf(m) * mp.expj(a)
    for x in [0.0, 0.5, 2.0, 4.0]:
        out.append("    {%s, %s, %s, %s, %s}," % (r(x), r(m), r(a), c(psi(x, lam)), c(dpsi(x, lam))))
out.append("};")

out.append("struct PsiComplexRef { cplx w, mu, psi; };")
out.append("inline const PsiComplexRef psi_complex_ref[] = {")
for w, mu in [(1 + 1j, 2j), (-1 + 0.5j, 3 - 1j), (2 - 2j, -2 + 1j), (0.5j, 1 + 1j)]:
    out.append("    {%s, %s, %s}," % (c(w), c(mu), c(psi(mp.mpc(w), mp.mpc(mu)))))
out.append("};")

out.append("struct XiRef { cplx t, xi; };")
out.append("inline const XiRef xi_ref[] = {")
for t in [2, 1 + 1j, 3 - 2j, 0.5 - 0.5j, -2 - 1j, 0.2j]:
    out.append("    {%s, %s}," % (c(t), c(xi(mp.mpc(t)))))
out.append("};")

# turning point: r minimising |xi(r e^{-i theta})| on r >= 0
out.append("struct TurningRef { double theta, r_star; };")
out.append("inline const TurningRef turning_ref[] = {")
for th in [0.2, 0.5, 0.8, 1.2, 1.5]:
    th = mp.mpf(th)
    g = lambda rr: abs(xi(rr * mp.expj(-th))) ** 2
    rs = [mp.mpf(k) / 100 for k in range(1, 200)]
    r0 = min(rs, key=g)
    dg = lambda rr: mp.diff(g, rr)
    out.append("    {%s, %s}," % (r(th), r(mp.findroot(dg, r0))))
out.append("};")

print("\n".join(out))
