#!/usr/bin/env python3
"""Arbitrary-precision reference values for the unit and acceptance tests.

Run once at development time:
    python3 tests/oracles/gen_oracles.py > include/krl/oracle_values.hpp
The generated header is committed; the build never runs this script.
"""
import random

import mpmath as mp
import sympy as sp

mp.mp.dps = 40


def cbrt(z):
    return mp.sign(z) * mp.cbrt(abs(z))


def tricomi_u_real(a, b, z):
    """Real-valued U(a;b;z); for z<0 the Kummer-basis continuation with a real cube root."""
    z = mp.mpf(z)
    if z > 0:
        return mp.hyperu(a, b, z)
    c1 = mp.gamma(1 - b) / mp.gamma(a - b + 1)
    c2 = mp.gamma(b - 1) / mp.gamma(a)
    if z == 0:
        return c1
    return c1 * mp.hyp1f1(a, b, z) + c2 * cbrt(z) ** int(mp.nint(3 * (1 - b))) * mp.hyp1f1(a - b + 1, 2 - b, z)


def tricomi_T(A, lam, x, v):
    A, x, v = mp.mpf(A), mp.mpf(x), mp.mpf(v)
    e = mp.mpf(lam + 2)
    if x == 0:
        return -3 * A ** (-e / 2) * abs(v) ** (lam + 2)
    tau = -v ** 3 / (9 * A * x)
    u = tricomi_u_real(-e / 3, mp.mpf(2) / 3, tau)
    return A ** (-e / 2) * v ** (lam + 2) - 2 * mp.mpf(9) ** (e / 3) * A ** (-e / 6) * x ** (e / 3) * u


def fmt(x):
    return mp.nstr(x, 25, min_fixed=-5, max_fixed=5) if x != 0 else "0.0"


def kernel_dim_specular5():
    """Dimension of ker(d_t + v d_x - d_vv) on the specular-constrained space of kinetic degree <= 5, n = 1."""
    t, x, v = sp.symbols("t x v")
    basis = []
    for bt in range(3):
        for bx in range(2):
            for bv in range(6):
                if 2 * bt + 3 * bx + bv > 5:
                    continue
                if bx == 0 and bv % 2 == 1:
                    continue
                basis.append(t ** bt * x ** bx * v ** bv)
    cs = sp.symbols("c0:%d" % len(basis))
    P = sum(c * b for c, b in zip(cs, basis))
    LP = sp.expand(sp.diff(P, t) + v * sp.diff(P, x) - sp.diff(P, v, 2))
    eqs = sp.Poly(LP, t, x, v).coeffs()
    M = sp.Matrix([[sp.diff(e, c) for c in cs] for e in eqs])
    return len(basis), len(basis) - M.rank()


def kernel_dim_full(k):
    t, x, v = sp.symbols("t x v")
    basis = [t ** bt * x ** bx * v ** bv for bt in range(5) for bx in range(4) for bv in range(10)
             if 2 * bt + 3 * bx + bv <= k]
    cs = sp.symbols("c0:%d" % len(basis))
    P = sum(c * b for c, b in zip(cs, basis))
    LP = sp.expand(sp.diff(P, t) + v * sp.diff(P, x) - sp.diff(P, v, 2))
    if LP == 0:
        return len(basis), len(basis)
    eqs = sp.Poly(LP, t, x, v).coeffs()
    M = sp.Matrix([[sp.diff(e, c) for c in cs] for e in eqs])
    return len(basis), len(basis) - M.rank()


def p1_example():
    """p1 for n=2, d_{x1 x2} phi^1 = 1 (all other Hessian entries 0), alpha_11 = 1."""
    x1, x2, v1, v2 = sp.symbols("x1 x2 v1 v2")
    X, V = [x1, x2], [v1, v2]
    H = [[[0, 1], [1, 0]], [[0, 0], [0, 0]]]  # H[i][j][k] = d_{x_j x_k} phi^i
    al = [[1, 0], [0, 0]]
    n = 2
    p = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k in range(n):
                p += (H[j][i][k] + H[i][j][k]) * al[i][j] * X[k]
    for i in range(n):
        for k in range(n):
            p += 4 * H[i][i][k] * al[i][i] * X[k]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                p -= H[i][j][k] * V[j] * V[k] * sum((al[i][l] + al[l][i]) * V[l] for l in range(n))
    return sp.expand(p)


def main():
    out = []
    w = out.append
    w("// Generated by tests/oracles/gen_oracles.py (mpmath %s, sympy %s, 40 digits). Do not edit." % (mp.__version__, sp.__version__))
    w("#pragma once")
    w("#include <array>")
    w("")
    w("namespace krl::oracle {")
    third = mp.mpf(1) / 3
    w("inline constexpr double gamma_m4_3 = %s;" % fmt(mp.gamma(-4 * third)))
    w("inline constexpr double gamma_2_3 = %s;" % fmt(mp.gamma(2 * third)))
    w("inline constexpr double gamma_1_3 = %s;" % fmt(mp.gamma(third)))
    w("inline constexpr double gamma_m1_3 = %s;" % fmt(mp.gamma(-third)))
    w("inline constexpr double gamma_m17_2 = %s;" % fmt(mp.gamma(mp.mpf(-17) / 2)))
    w("inline constexpr double gamma_19_7 = %s;" % fmt(mp.gamma(mp.mpf(19.7))))
    w("inline constexpr double gamma_m19p3 = %s;" % fmt(mp.gamma(mp.mpf(-19.3))))
    u0 = tricomi_u_real(-5 * third, 2 * third, 0)
    w("inline constexpr double U_m5_3_2_3_at0 = %s;" % fmt(u0))
    w("inline constexpr double T13_at_1_0 = %s;" % fmt(tricomi_T(1, 3, 1, 0)))
    w("// L T = c * v^3 with L = v d_x - A d_vv, lambda = 3, A = 1.")
    w("inline constexpr double residual_const_A1 = -20.0;")

    # Kummer grid: |z| <= 30.
    rng = random.Random(20260101)
    rows = []
    while len(rows) < 200:
        a = mp.mpf(round(rng.uniform(-6, 6), 3))
        b = mp.mpf(round(rng.uniform(0.2, 6), 3))
        z = mp.mpf(round(rng.uniform(-30, 30), 3))
        m = mp.hyp1f1(a, b, z)
        rows.append((a, b, z, m))
    w("struct KummerRow { double a, b, z, m; };")
    w("inline constexpr std::array<KummerRow, %d> kummer_grid = {{" % len(rows))
    for a, b, z, m in rows:
        w("    {%s, %s, %s, %s}," % (fmt(a), fmt(b), fmt(z), fmt(m)))
    w("}};")

    # U at selected arguments.
    urows = []
    for (a, b) in [(-5 * third, 2 * third), (-11 * third, 2 * third), (-4 * third, 4 * third), (0.5, 2 * third)]:
        for z in [-200, -50, -10, -1, -0.01, 0.01, 1, 5, 10, 20, 30, 60, 150]:
            urows.append((a, b, mp.mpf(z), tricomi_u_real(a, b, z)))
    w("struct URow { double a, b, z, u; };")
    w("inline constexpr std::array<URow, %d> tricomi_u_grid = {{" % len(urows))
    for a, b, z, u in urows:
        w("    {%s, %s, %s, %s}," % (fmt(a), fmt(b), fmt(z), fmt(u)))
    w("}};")

    # T_{A,lambda}(x, v) samples.
    trows = []
    for A in [1, 0.5, 2]:
        for lam in [3, 9]:
            for (x, v) in [(1, 0), (1, 1), (1, -1), (0.1, 2), (0.1, -2), (1e-3, 1), (1e-3, -1), (2, 0.3), (0.5, -0.7), (0, 1.5), (0, -1.5)]:
                trows.append((mp.mpf(A), lam, mp.mpf(x), mp.mpf(v), tricomi_T(A, lam, x, v)))
    w("struct TRow { double A; int lambda; double x, v, value; };")
    w("inline constexpr std::array<TRow, %d> tricomi_T_grid = {{" % len(trows))
    for A, lam, x, v, T in trows:
        w("    {%s, %d, %s, %s, %s}," % (fmt(A), lam, fmt(x), fmt(v), fmt(T)))
    w("}};")

    gaps = [abs(tricomi_T(1, 3, e, 1) - tricomi_T(1, 3, e, -1)) for e in (mp.mpf("1e-2"), mp.mpf("1e-3"), mp.mpf("1e-4"))]
    w("inline constexpr std::array<double, 3> evenness_gaps = {%s};" % ", ".join(fmt(g) for g in gaps))
    # Leading asymptotics of U(-5/3; 2/3; -+s^3) / s^5 at s = 10.
    w("inline constexpr double U_kin_ratio_s10_neg = %s;" % fmt(tricomi_u_real(-5 * third, 2 * third, -1000) / 1e5))
    w("inline constexpr double U_kin_ratio_s10_pos = %s;" % fmt(tricomi_u_real(-5 * third, 2 * third, 1000) / 1e5))

    nb, kd = kernel_dim_specular5()
    w("inline constexpr int specular5_dim = %d;" % nb)
    w("inline constexpr int specular5_kernel_dim = %d;" % kd)
    for k in (1, 3, 5, 6):
        nb, kd = kernel_dim_full(k)
        w("inline constexpr int full%d_dim = %d;" % (k, nb))
        w("inline constexpr int full%d_kernel_dim = %d;" % (k, kd))
    w("// p1 for d_{x1x2}phi^1 = 1, alpha_11 = 1 (n = 2): %s" % p1_example())
    w("}  // namespace krl::oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
