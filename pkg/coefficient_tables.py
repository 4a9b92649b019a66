# coefficient_tables.py
"""
Closed forms of I_A, I_B, I_C as combinations of polygamma products at 1, m, n, n-m
and the three unsimplifiable sums over psi(k+n-m)/k. Coefficients a1..a18, b1..b25,
c1..c29 are polynomials in (m, n); a17, b23, c27 also carry psi0(n), psi0(n-m).

Valid for m < n only (psi_j(n-m) appears).
"""
from __future__ import annotations

from exact_core import ksum


def _q(m, n):
    return m ** 2 + 3 * m * n + n ** 2 + 1


def _qa(m, n):
    return m ** 3 + 28 * m ** 2 * n + 6 * m ** 2 + 30 * m * n ** 2 + 18 * m * n + 11 * m + 6 * n ** 2 + 26 * n + 6


def _qb(m, n):
    return 3 * m ** 3 + 84 * m ** 2 * n + 10 * m ** 2 + 90 * m * n ** 2 + 6 * m * n + 21 * m - 6 * n ** 2 + 66 * n + 14


def _qb2(m, n):
    return 3 * m ** 2 + 9 * m * n - 2 * m + 3 * n ** 2 - 2 * n + 3


def _qc(m, n):
    return m ** 3 + 28 * m ** 2 * n + 2 * m ** 2 + 30 * m * n ** 2 - 6 * m * n + 5 * m - 6 * n ** 2 + 20 * n + 4


def _qc2(m, n):
    return m ** 2 + 3 * m * n - m + n ** 2 - n + 1


# -------------------------
# Basis sums
# -------------------------

def ub0(ev, m, n):
    return ksum(1, m, lambda k: ev.frac(ev.psi0(k), k + n - m))


def ub1(ev, m, n):
    return ksum(1, m, lambda k: ev.frac(ev.psi0(k + n - m), k))


def ub2(ev, m, n):
    return ksum(1, m, lambda k: ev.frac(ev.psi0(k + n - m) ** 2, k))


def ub3(ev, m, n):
    return ksum(1, m, lambda k: ev.frac(ev.psi1(k + n - m), k))


# -------------------------
# Term labels, index-aligned with *_coeffs
# -------------------------

A_TERMS = (
    "1", "psi0(n)", "psi0(n-m)", "psi0(1)psi0(n-m)", "psi0(m)psi0(n-m)", "psi0(n)psi0(n-m)", "psi0(n-m)^2",
    "psi0(1)psi0(n)psi0(n-m)", "psi0(1)psi0(n-m)^2", "psi0(m)psi0(n)psi0(n-m)", "psi0(m)psi0(n-m)^2",
    "psi0(n)psi0(n-m)^2", "psi0(n-m)^3", "psi1(n-m)", "psi0(n)psi1(n-m)", "psi2(n-m)", "ub1", "ub2",
)
B_TERMS = (
    "1", "psi0(n)", "psi0(n-m)", "psi0(1)psi0(n-m)", "psi0(m)psi0(n-m)", "psi0(n)^2", "psi0(n)psi0(n-m)",
    "psi0(n-m)^2", "psi0(1)psi0(n)psi0(n-m)", "psi0(1)psi0(n-m)^2", "psi0(m)psi0(n)psi0(n-m)",
    "psi0(n)^2psi0(n-m)", "psi0(m)psi0(n-m)^2", "psi0(n)psi0(n-m)^2", "psi0(n-m)^3", "psi1(n)",
    "psi0(n-m)psi1(n)", "psi1(n-m)", "psi0(1)psi1(n-m)", "psi0(m)psi1(n-m)", "psi0(n)psi1(n-m)",
    "psi0(n-m)psi1(n-m)", "ub1", "ub2", "ub3",
)
C_TERMS = (
    "1", "psi0(n)", "psi0(n-m)", "psi0(1)psi0(n-m)", "psi0(m)psi0(n-m)", "psi0(n)^2", "psi0(n)psi0(n-m)",
    "psi0(n-m)^2", "psi0(1)psi0(n)psi0(n-m)", "psi0(m)psi0(n)psi0(n-m)", "psi0(n)^3", "psi0(n)^2psi0(n-m)",
    "psi0(1)psi0(n-m)^2", "psi0(m)psi0(n-m)^2", "psi0(n)psi0(n-m)^2", "psi0(n-m)^3", "psi1(n)",
    "psi0(n)psi1(n)", "psi0(n-m)psi1(n)", "psi1(n-m)", "psi0(1)psi1(n-m)", "psi0(m)psi1(n-m)",
    "psi0(n)psi1(n-m)", "psi0(n-m)psi1(n-m)", "psi2(n)", "psi2(n-m)", "ub1", "ub2", "ub3",
)


# -------------------------
# Table of I_A
# -------------------------

def a_coeffs(ev, m, n):
    q = _q(m, n)
    qa = _qa(m, n)
    a1 = ev.frac(m * (37 * m ** 3 + 4012 * m ** 2 * n - 30 * m ** 2 + 4410 * m * n ** 2 - 330 * m * n - 169 * m
                      + 84 * n ** 3 - 30 * n ** 2 - 250 * n + 162), 288)
    a2 = ev.frac(-n * (12 * m ** 3 + 414 * m ** 2 * n - 6 * m ** 2 + 364 * m * n ** 2 + 6 * m * n - 94 * m
                       + 7 * n ** 3 - 6 * n ** 2 - 67 * n + 90), 24)
    a3 = ev.frac(-(7 * m ** 4 + 352 * m ** 3 * n + 18 * m ** 3 + 336 * m ** 2 * n + 5 * m ** 2 - 352 * m * n ** 3
                   + 360 * m * n ** 2 + 216 * m * n + 42 * m - 7 * n ** 4 + 6 * n ** 3 + 139 * n ** 2 + 222 * n + 72), 24)
    a4 = ev.frac(m * qa, 2)
    a5 = ev.frac(-m * qa, 2)
    a6 = ev.frac(n * (30 * m ** 2 * n - 18 * m ** 2 + 28 * m * n ** 2 - 54 * m * n + 26 * m + n ** 3 - 18 * n ** 2
                      + 11 * n - 18), 2)
    a7 = ev.frac(m ** 4 + 28 * m ** 3 * n + 6 * m ** 3 - 30 * m ** 2 * n ** 2 + 6 * m ** 2 * n + 11 * m ** 2
                 - 56 * m * n ** 3 - 30 * m * n ** 2 - 26 * m * n + 6 * m - 2 * n ** 4 - 12 * n ** 3 - 22 * n ** 2
                 - 12 * n, 4)
    a8 = 6 * m * n * q
    a9 = 6 * m * n * q
    a10 = -6 * m * n * q
    a11 = -6 * m * n * q
    a12 = 3 * m * n * q
    a13 = -2 * m * n * q
    a14 = ev.frac(m * qa, 4)
    a15 = 3 * m * n * q
    a16 = m * n * q
    a17 = ev.frac(m, 2) * (qa + 12 * n * q * ev.psi0(n) + 24 * n * q * ev.psi0(n - m))
    a18 = -6 * m * n * q
    return [a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, a14, a15, a16, a17, a18]


def a_terms(ev, m, n):
    p1 = ev.psi0(1)
    pm = ev.psi0(m)
    pn = ev.psi0(n)
    pd = ev.psi0(n - m)
    return [
        1, pn, pd, p1 * pd, pm * pd, pn * pd, pd ** 2, p1 * pn * pd, p1 * pd ** 2, pm * pn * pd,
        pm * pd ** 2, pn * pd ** 2, pd ** 3, ev.psi1(n - m), pn * ev.psi1(n - m), ev.psi2(n - m),
        ub1(ev, m, n), ub2(ev, m, n),
    ]


def closed_ia(ev, m, n):
    a = a_coeffs(ev, m, n)
    t = a_terms(ev, m, n)
    return ksum(0, 17, lambda i: a[i] * t[i])


# -------------------------
# Table of I_B
# -------------------------

def b_coeffs(ev, m, n):
    q = _q(m, n)
    qb = _qb(m, n)
    qb2 = _qb2(m, n)
    b1 = ev.frac(m * (111 * m ** 3 + 12036 * m ** 2 * n + 2198 * m ** 2 + 13230 * m * n ** 2 + 4530 * m * n
                      + 1629 * m + 252 * n ** 3 + 150 * n ** 2 - 414 * n - 194), 864)
    b2 = ev.frac(-(36 * m ** 3 * n + 1242 * m ** 2 * n ** 2 + 174 * m ** 2 * n + 72 * m ** 2 + 1092 * m * n ** 3
                   + 690 * m * n ** 2 - 234 * m * n + 168 * m + 21 * n ** 4 + 14 * n ** 3 - 321 * n ** 2 + 358 * n
                   + 24), 72)
    b3 = ev.frac(-(21 * m ** 4 + 1056 * m ** 3 * n + 230 * m ** 3 + 864 * m ** 2 * n + 255 * m ** 2
                   - 1056 * m * n ** 3 + 360 * m * n ** 2 + 216 * m * n + 94 * m - 21 * n ** 4 - 14 * n ** 3
                   + 249 * n ** 2 + 434 * n + 144), 72)
    b4 = ev.frac(m * qb, 6)
    b5 = ev.frac(-m * qb, 6)
    b6 = ev.frac(-2 * n * (3 * m ** 2 + 12 * m * n - 3 * m + n ** 2 - 3 * n + 2), 3)
    b7 = ev.frac(-12 * m ** 3 + 90 * m ** 2 * n ** 2 - 138 * m ** 2 * n - 24 * m ** 2 + 84 * m * n ** 3
                 - 150 * m * n ** 2 + 66 * m * n - 12 * m + 3 * n ** 4 - 50 * n ** 3 + 45 * n ** 2 - 46 * n, 6)
    b8 = ev.frac(3 * m ** 4 + 84 * m ** 3 * n + 26 * m ** 3 - 90 * m ** 2 * n ** 2 + 66 * m ** 2 * n + 45 * m ** 2
                 - 168 * m * n ** 3 - 66 * m * n ** 2 - 66 * m * n + 22 * m - 6 * n ** 4 - 36 * n ** 3 - 66 * n ** 2
                 - 36 * n, 12)
    b9 = 2 * m * n * qb2
    b10 = 6 * m * n * q
    b11 = -2 * m * n * qb2
    b12 = -4 * m * n * (m + n)
    b13 = -6 * m * n * q
    b14 = m * n * (3 * m ** 2 + 9 * m * n + 2 * m + 3 * n ** 2 + 2 * n + 3)
    b15 = -2 * m * n * q
    b16 = ev.frac(-n * (30 * m ** 2 * n - 6 * m ** 2 + 28 * m * n ** 2 - 18 * m * n + 26 * m + n ** 3 - 6 * n ** 2
                        + 11 * n - 6), 6)
    b17 = -2 * m * n * q
    b18 = ev.frac(m ** 4 + 28 * m ** 3 * n - 2 * m ** 3 + 90 * m ** 2 * n ** 2 - 18 * m ** 2 * n - m ** 2
                  + 56 * m * n ** 3 + 18 * m * n ** 2 + 66 * m * n + 2 * m + 2 * n ** 4 + 12 * n ** 3 + 22 * n ** 2
                  + 12 * n, 12)
    b19 = -2 * m * n * q
    b20 = 2 * m * n * q
    b21 = m * n * (m ** 2 + 3 * m * n - 2 * m + n ** 2 - 2 * n + 1)
    b22 = 2 * m * n * q
    b23 = ev.frac(m, 6) * (qb + 12 * n * qb2 * ev.psi0(n) + 72 * n * q * ev.psi0(n - m))
    b24 = -6 * m * n * q
    b25 = -2 * m * n * q
    return [b1, b2, b3, b4, b5, b6, b7, b8, b9, b10, b11, b12, b13, b14, b15, b16, b17, b18, b19, b20, b21, b22,
            b23, b24, b25]


def b_terms(ev, m, n):
    p1 = ev.psi0(1)
    pm = ev.psi0(m)
    pn = ev.psi0(n)
    pd = ev.psi0(n - m)
    t1n = ev.psi1(n)
    t1d = ev.psi1(n - m)
    return [
        1, pn, pd, p1 * pd, pm * pd, pn ** 2, pn * pd, pd ** 2, p1 * pn * pd, p1 * pd ** 2, pm * pn * pd,
        pn ** 2 * pd, pm * pd ** 2, pn * pd ** 2, pd ** 3, t1n, pd * t1n, t1d, p1 * t1d, pm * t1d, pn * t1d,
        pd * t1d, ub1(ev, m, n), ub2(ev, m, n), ub3(ev, m, n),
    ]


def closed_ib(ev, m, n):
    b = b_coeffs(ev, m, n)
    t = b_terms(ev, m, n)
    return ksum(0, 24, lambda i: b[i] * t[i])


# -------------------------
# Table of I_C
# -------------------------

def c_coeffs(ev, m, n):
    q = _q(m, n)
    qc = _qc(m, n)
    qc2 = _qc2(m, n)
    c1 = ev.frac(m * (37 * m ** 3 + 4012 * m ** 2 * n + 1114 * m ** 2 + 4410 * m * n ** 2 + 2430 * m * n
                      + 1043 * m + 84 * n ** 3 + 90 * n ** 2 - 82 * n - 34), 288)
    c2 = ev.frac(-(12 * m ** 3 * n + 414 * m ** 2 * n ** 2 + 90 * m ** 2 * n - 36 * m ** 2 + 364 * m * n ** 3
                   + 342 * m * n ** 2 - 142 * m * n + 12 * m + 7 * n ** 4 + 10 * n ** 3 - 127 * n ** 2 + 134 * n
                   + 12), 24)
    c3 = ev.frac(-(7 * m ** 4 + 352 * m ** 3 * n + 106 * m ** 3 + 264 * m ** 2 * n + 125 * m ** 2
                   - 352 * m * n ** 3 + 26 * m - 7 * n ** 4 - 10 * n ** 3 + 55 * n ** 2 + 106 * n + 36), 24)
    c4 = ev.frac(m * qc, 2)
    c5 = ev.frac(-m * qc, 2)
    c6 = ev.frac(-6 * m ** 2 * n + 3 * m ** 2 - 24 * m * n ** 2 + 15 * m * n + 3 * m - 2 * n ** 3 + 6 * n ** 2
                 - 4 * n, 2)
    c7 = ev.frac(-(6 * m ** 3 - 30 * m ** 2 * n ** 2 + 60 * m ** 2 * n + 12 * m ** 2 - 28 * m * n ** 3
                   + 48 * m * n ** 2 - 20 * m * n + 6 * m - n ** 4 + 16 * n ** 3 - 17 * n ** 2 + 14 * n), 2)
    c8 = ev.frac(m ** 4 + 28 * m ** 3 * n + 10 * m ** 3 - 30 * m ** 2 * n ** 2 + 30 * m ** 2 * n + 17 * m ** 2
                 - 56 * m * n ** 3 - 18 * m * n ** 2 - 20 * m * n + 8 * m - 2 * n ** 4 - 12 * n ** 3 - 22 * n ** 2
                 - 12 * n, 4)
    c9 = 6 * m * n * qc2
    c10 = -6 * m * n * qc2
    c11 = m * n
    c12 = -6 * m * n * (m + n)
    c13 = 6 * m * n * q
    c14 = -6 * m * n * q
    c15 = 3 * m * n * (m ** 2 + 3 * m * n + m + n ** 2 + n + 1)
    c16 = -2 * m * n * q
    c17 = ev.frac(4 * m ** 3 - 30 * m ** 2 * n ** 2 + 30 * m ** 2 * n + 6 * m ** 2 - 28 * m * n ** 3
                  + 30 * m * n ** 2 - 20 * m * n + 2 * m - n ** 4 + 6 * n ** 3 - 11 * n ** 2 + 6 * n, 4)
    c18 = 3 * m * n * (m + n)
    c19 = -3 * m * n * q
    c20 = ev.frac(-4 * m ** 3 + 30 * m ** 2 * n ** 2 - 18 * m ** 2 * n - 6 * m ** 2 + 28 * m * n ** 3
                  + 6 * m * n ** 2 + 20 * m * n - 2 * m + n ** 4 + 6 * n ** 3 + 11 * n ** 2 + 6 * n, 4)
    c21 = -3 * m * n * q
    c22 = 3 * m * n * q
    c23 = -3 * m * n * (m + n)
    c24 = 3 * m * n * q
    c25 = ev.frac(m * n * q, 2)
    c26 = ev.frac(-m * n * q, 2)
    c27 = ev.frac(m, 2) * (qc + 12 * n * qc2 * ev.psi0(n) + 24 * n * q * ev.psi0(n - m))
    c28 = -6 * m * n * q
    c29 = -3 * m * n * q
    return [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15, c16, c17, c18, c19, c20, c21, c22,
            c23, c24, c25, c26, c27, c28, c29]


def c_terms(ev, m, n):
    p1 = ev.psi0(1)
    pm = ev.psi0(m)
    pn = ev.psi0(n)
    pd = ev.psi0(n - m)
    t1n = ev.psi1(n)
    t1d = ev.psi1(n - m)
    return [
        1, pn, pd, p1 * pd, pm * pd, pn ** 2, pn * pd, pd ** 2, p1 * pn * pd, pm * pn * pd, pn ** 3,
        pn ** 2 * pd, p1 * pd ** 2, pm * pd ** 2, pn * pd ** 2, pd ** 3, t1n, pn * t1n, pd * t1n, t1d,
        p1 * t1d, pm * t1d, pn * t1d, pd * t1d, ev.psi2(n), ev.psi2(n - m),
        ub1(ev, m, n), ub2(ev, m, n), ub3(ev, m, n),
    ]


def closed_ic(ev, m, n):
    c = c_coeffs(ev, m, n)
    t = c_terms(ev, m, n)
    return ksum(0, 28, lambda i: c[i] * t[i])


# -------------------------
# Cancellation in I_A - 3 I_B + 2 I_C
# -------------------------

def surviving_terms(ev, m, n):
    """The part of I_A - 3I_B + 2I_C left after every psi_j(n-m) term and basis sum cancels."""
    a = a_coeffs(ev, m, n)
    b = b_coeffs(ev, m, n)
    c = c_coeffs(ev, m, n)
    pn = ev.psi0(n)
    return (
        2 * c[24] * ev.psi2(n) + 2 * c[17] * pn * ev.psi1(n) + (2 * c[16] - 3 * b[15]) * ev.psi1(n)
        + 2 * c[10] * pn ** 3 + (2 * c[5] - 3 * b[5]) * pn ** 2
        + (a[1] - 3 * b[1] + 2 * c[1]) * pn + a[0] - 3 * b[0] + 2 * c[0]
    )
