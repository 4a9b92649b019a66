# identities/first_type.py
"""
Closed and semi-closed right-hand sides of

    sum_{k=1}^{n} k^c psi_j1(k+a)^b1 psi_j2(k+a)^b2 ...

for c in 0..3. Names follow the summand: a2 = sum psi0(k+a), a7 = sum k psi0(k+a)^2, ...
a26..a29 keep the residual sum_{k=1}^{n} psi0(k)/(k+a).

All functions take (ev, n, a) with n >= 0 terms and shift a >= 0 (integer for EXACT,
any non-negative real for FLOAT).
"""
from __future__ import annotations

from exact_core import ksum


def residual(ev, n, a):
    return ksum(1, n, lambda k: ev.frac(ev.psi0(k), k + a))


def _s1(n, a):
    return a - a ** 2 + n ** 2 + n


def _s2(n, a):
    return 2 * a ** 3 - 3 * a ** 2 + a + 2 * n ** 3 + 3 * n ** 2 + n


def _s3(n, a):
    # -4 * (sum_{j=a}^{a+n-1} j^3)
    return a ** 4 - 2 * a ** 3 + a ** 2 - n ** 4 - 2 * n ** 3 - n ** 2


# -------------------------
# sum k^c psi0(k+a)
# -------------------------

def a2(ev, n, a):
    return (a + n) * ev.psi0(a + n + 1) - a * ev.psi0(a + 1) - n


def a3(ev, n, a):
    return (
        ev.frac(_s1(n, a), 2) * ev.psi0(a + n + 1)
        + ev.frac((a - 1) * a, 2) * ev.psi0(a + 1)
        + ev.frac(n * (2 * a - n - 3), 4)
    )


def a4(ev, n, a):
    return (
        ev.frac(_s2(n, a), 6) * ev.psi0(a + n + 1)
        - ev.frac(a * (2 * a ** 2 - 3 * a + 1), 6) * ev.psi0(a + 1)
        - ev.frac(n * (12 * a ** 2 - 6 * a * n - 24 * a + 4 * n ** 2 + 15 * n + 17), 36)
    )


def a5(ev, n, a):
    return (
        ev.frac(-1 * _s3(n, a), 4) * ev.psi0(a + n + 1)
        + ev.frac((a - 1) ** 2 * a ** 2, 4) * ev.psi0(a + 1)
        - ev.frac(n * (6 * a ** 2 * n - 12 * a ** 3 + 30 * a ** 2 - 4 * a * n ** 2 - 18 * a * n - 26 * a
                       + 3 * n ** 3 + 14 * n ** 2 + 21 * n + 10), 48)
    )


# -------------------------
# sum k^c psi0(k+a)^2
# -------------------------

def a6(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    return (a + n) * p ** 2 - (2 * a + 2 * n + 1) * p - a * q ** 2 + (2 * a + 1) * q + 2 * n


def a7(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    return (
        ev.frac(_s1(n, a), 2) * p ** 2
        + ev.frac(6 * a ** 2 + 4 * a * n - 2 * a - 2 * n ** 2 - 6 * n - 2, 4) * p
        + ev.frac((a - 1) * a, 2) * q ** 2
        + ev.frac(2 + 2 * a - 6 * a ** 2, 4) * q
        + ev.frac(n * (n + 5 - 6 * a), 4)
    )


def a8(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    return (
        ev.frac(_s2(n, a), 6) * p ** 2
        - ev.frac(22 * a ** 3 + 12 * a ** 2 * n - 21 * a ** 2 - 6 * a * n ** 2 - 24 * a * n - a
                  + 4 * n ** 3 + 15 * n ** 2 + 17 * n + 3, 18) * p
        - ev.frac(a * (2 * a ** 2 - 3 * a + 1), 6) * q ** 2
        + ev.frac(22 * a ** 3 - 21 * a ** 2 - a + 3, 18) * q
        + ev.frac(n * (132 * a ** 2 - 30 * a * n - 192 * a + 8 * n ** 2 + 39 * n + 79), 108)
    )


def a9(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    return (
        ev.frac(-1 * _s3(n, a), 4) * p ** 2
        + ev.frac(25 * a ** 4 + 12 * a ** 3 * n - 38 * a ** 3 - 6 * a ** 2 * n ** 2 - 30 * a ** 2 * n
                  + 11 * a ** 2 + 4 * a * n ** 3 + 18 * a * n ** 2 + 26 * a * n + 2 * a - 3 * n ** 4
                  - 14 * n ** 3 - 21 * n ** 2 - 10 * n, 24) * p
        + ev.frac((a - 1) ** 2 * a ** 2, 4) * q ** 2
        - ev.frac(a * (25 * a ** 3 - 38 * a ** 2 + 11 * a + 2), 24) * q
        + ev.frac(n * (78 * a ** 2 * n - 300 * a ** 3 + 606 * a ** 2 - 28 * a * n ** 2 - 162 * a * n
                       - 410 * a + 9 * n ** 3 + 50 * n ** 2 + 111 * n + 118), 288)
    )


# -------------------------
# sum k^c psi0(k+a)^3
# -------------------------

def a10(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    return (
        ev.frac(ev.psi1(a + 1) - ev.psi1(a + n + 1), 2)
        + (a + n) * p ** 3 - ev.frac(3 * (2 * a + 2 * n + 1), 2) * p ** 2 + 3 * (2 * a + 2 * n + 1) * p
        - a * q ** 3 + ev.frac(3 * (2 * a + 1), 2) * q ** 2 - 3 * (2 * a + 1) * q - 6 * n
    )


def a11(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    return (
        ev.frac(2 * a - 1, 4) * (ev.psi1(a + n + 1) - ev.psi1(a + 1))
        + ev.frac(_s1(n, a), 2) * p ** 3
        + ev.frac(3 * (3 * a ** 2 + 2 * a * n - a - n ** 2 - 3 * n - 1), 4) * p ** 2
        + ev.frac(6 * a + 6 * n ** 2 + 30 * n + 14 - 42 * a ** 2 - 36 * a * n, 8) * p
        + ev.frac((a - 1) * a, 2) * q ** 3
        + ev.frac(3 * (1 + a - 3 * a ** 2), 4) * q ** 2
        + ev.frac(21 * a ** 2 - 3 * a - 7, 4) * q
        + ev.frac(42 * a * n - 3 * n ** 2 - 27 * n, 8)
    )


def a12(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    return (
        ev.frac(6 * a ** 2 - 6 * a + 1, 12) * (ev.psi1(a + 1) - ev.psi1(a + n + 1))
        + ev.frac(_s2(n, a), 6) * p ** 3
        - ev.frac(22 * a ** 3 + 12 * a ** 2 * n - 21 * a ** 2 - 6 * a * n ** 2 - 24 * a * n - a
                  + 4 * n ** 3 + 15 * n ** 2 + 17 * n + 3, 12) * p ** 2
        + ev.frac(170 * a ** 3 + 132 * a ** 2 * n - 123 * a ** 2 - 30 * a * n ** 2 - 192 * a * n - 47 * a
                  + 8 * n ** 3 + 39 * n ** 2 + 79 * n + 33, 36) * p
        - ev.frac(a * (2 * a ** 2 - 3 * a + 1), 6) * q ** 3
        + ev.frac(22 * a ** 3 - 21 * a ** 2 - a + 3, 12) * q ** 2
        - ev.frac(170 * a ** 3 - 123 * a ** 2 - 47 * a + 33, 36) * q
        + ev.frac(114 * a * n ** 2 - 1020 * a ** 2 * n + 1248 * a * n - 16 * n ** 3 - 105 * n ** 2 - 365 * n, 216)
    )


def a13(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    return (
        ev.frac(a * (2 * a ** 2 - 3 * a + 1), 4) * (ev.psi1(a + n + 1) - ev.psi1(a + 1))
        - ev.frac(_s3(n, a), 4) * p ** 3
        + ev.frac(25 * a ** 4 + 12 * a ** 3 * n - 38 * a ** 3 - 6 * a ** 2 * n ** 2 - 30 * a ** 2 * n
                  + 11 * a ** 2 + 4 * a * n ** 3 + 18 * a * n ** 2 + 26 * a * n + 2 * a - 3 * n ** 4
                  - 14 * n ** 3 - 21 * n ** 2 - 10 * n, 16) * p ** 2
        - ev.frac(415 * a ** 4 + 300 * a ** 3 * n - 530 * a ** 3 - 78 * a ** 2 * n ** 2 - 606 * a ** 2 * n
                  + 17 * a ** 2 + 28 * a * n ** 3 + 162 * a * n ** 2 + 410 * a * n + 146 * a - 9 * n ** 4
                  - 50 * n ** 3 - 111 * n ** 2 - 118 * n - 36, 96) * p
        + ev.frac((a - 1) ** 2 * a ** 2, 4) * q ** 3
        - ev.frac(a * (25 * a ** 3 - 38 * a ** 2 + 11 * a + 2), 16) * q ** 2
        + ev.frac(415 * a ** 4 - 530 * a ** 3 + 17 * a ** 2 + 146 * a - 36, 96) * q
        + ev.frac(4980 * a ** 3 * n - 690 * a ** 2 * n ** 2 - 8850 * a ** 2 * n + 148 * a * n ** 3
                  + 1134 * a * n ** 2 + 4790 * a * n - 27 * n ** 4 - 182 * n ** 3 - 525 * n ** 2 - 850 * n, 1152)
    )


# -------------------------
# sum k^c psi1(k+a), sum k^c psi2(k+a)
# -------------------------

def a14(ev, n, a):
    return (a + n) * ev.psi1(a + n + 1) - a * ev.psi1(a + 1) + ev.psi0(a + n + 1) - ev.psi0(a + 1)


def a15(ev, n, a):
    return ev.frac(
        _s1(n, a) * ev.psi1(a + n + 1) + (a - 1) * a * ev.psi1(a + 1)
        + (1 - 2 * a) * ev.psi0(a + n + 1) + (2 * a - 1) * ev.psi0(a + 1) + n,
        2,
    )


def a16(ev, n, a):
    c = 6 * a ** 2 - 6 * a + 1
    return ev.frac(
        _s2(n, a) * ev.psi1(a + n + 1) + a * (a - 1) * (1 - 2 * a) * ev.psi1(a + 1)
        + c * (ev.psi0(a + n + 1) - ev.psi0(a + 1)) + n ** 2 + 4 * n - 4 * a * n,
        6,
    )


def a17(ev, n, a):
    c = 12 * a * (2 * a ** 2 - 3 * a + 1)
    return ev.frac(
        -6 * _s3(n, a) * ev.psi1(a + n + 1) + 6 * (a ** 4 - 2 * a ** 3 + a ** 2) * ev.psi1(a + 1)
        + c * (ev.psi0(a + 1) - ev.psi0(a + n + 1))
        + 18 * a ** 2 * n - 6 * a * n ** 2 - 30 * a * n + 2 * n ** 3 + 9 * n ** 2 + 13 * n,
        24,
    )


def a18(ev, n, a):
    return (a + n) * ev.psi2(a + n + 1) - a * ev.psi2(a + 1) + 2 * ev.psi1(a + n + 1) - 2 * ev.psi1(a + 1)


def a19(ev, n, a):
    return (
        ev.frac(_s1(n, a), 2) * ev.psi2(a + n + 1) + ev.frac(a * (a - 1), 2) * ev.psi2(a + 1)
        + (1 - 2 * a) * (ev.psi1(a + n + 1) - ev.psi1(a + 1))
        + ev.psi0(a + 1) - ev.psi0(a + n + 1)
    )


def a20(ev, n, a):
    c = 6 * a ** 2 - 6 * a + 1
    return ev.frac(
        _s2(n, a) * ev.psi2(a + n + 1) + a * (3 * a - 1 - 2 * a ** 2) * ev.psi2(a + 1)
        + 2 * c * (ev.psi1(a + n + 1) - ev.psi1(a + 1))
        + 6 * (2 * a - 1) * (ev.psi0(a + n + 1) - ev.psi0(a + 1)) - 4 * n,
        6,
    )


def a21(ev, n, a):
    c = 6 * a ** 2 - 6 * a + 1
    return ev.frac(
        -1 * _s3(n, a) * ev.psi2(a + n + 1) + (a - 1) ** 2 * a ** 2 * ev.psi2(a + 1)
        + 4 * a * (2 * a ** 2 - 3 * a + 1) * (ev.psi1(a + 1) - ev.psi1(a + n + 1))
        + 2 * c * (ev.psi0(a + 1) - ev.psi0(a + n + 1)) + 6 * a * n - n ** 2 - 5 * n,
        4,
    )


# -------------------------
# sum k^c psi0(k+a) psi1(k+a)
# -------------------------

def a22(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    r = ev.psi1(a + n + 1)
    s = ev.psi1(a + 1)
    return (
        (a + n) * p * r - a * q * s
        - ev.frac(2 * a + 2 * n + 1, 2) * r + ev.frac(2 * a + 1, 2) * s
        + ev.frac(p ** 2 - q ** 2, 2) - p + q
    )


def a23(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    r = ev.psi1(a + n + 1)
    s = ev.psi1(a + 1)
    return ev.frac(
        2 * _s1(n, a) * p * r + 2 * (a - 1) * a * q * s
        + (3 * a ** 2 + 2 * a * n - a - n ** 2 - 3 * n - 1) * r + (1 + a - 3 * a ** 2) * s
        + (1 - 2 * a) * p ** 2 + (6 * a + 2 * n - 1) * p + (2 * a - 1) * q ** 2 + (1 - 6 * a) * q - 3 * n,
        4,
    )


def a24(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    r = ev.psi1(a + n + 1)
    s = ev.psi1(a + 1)
    c = 6 * a ** 2 - 6 * a + 1
    return ev.frac(
        6 * _s2(n, a) * p * r - 6 * a * (2 * a ** 2 - 3 * a + 1) * q * s
        + (21 * a ** 2 + 6 * a * n ** 2 + 24 * a * n + a - 22 * a ** 3 - 12 * a ** 2 * n
           - 4 * n ** 3 - 15 * n ** 2 - 17 * n - 3) * r
        + (22 * a ** 3 - 21 * a ** 2 - a + 3) * s
        + 3 * c * (p ** 2 - q ** 2)
        + (42 * a + 6 * n ** 2 + 24 * n + 1 - 66 * a ** 2 - 24 * a * n) * p
        + (66 * a ** 2 - 42 * a - 1) * q
        + 44 * a * n - 5 * n ** 2 - 32 * n,
        36,
    )


def a25(ev, n, a):
    p = ev.psi0(a + n + 1)
    q = ev.psi0(a + 1)
    r = ev.psi1(a + n + 1)
    s = ev.psi1(a + 1)
    c = 72 * a * (2 * a ** 2 - 3 * a + 1)
    return ev.frac(
        -72 * _s3(n, a) * p * r + 72 * (a - 1) ** 2 * a ** 2 * q * s
        + (150 * a ** 4 + 72 * a ** 3 * n - 228 * a ** 3 - 36 * a ** 2 * n ** 2 - 180 * a ** 2 * n
           + 66 * a ** 2 + 24 * a * n ** 3 + 108 * a * n ** 2 + 156 * a * n + 12 * a - 18 * n ** 4
           - 84 * n ** 3 - 126 * n ** 2 - 60 * n) * r
        + (228 * a ** 3 - 150 * a ** 4 - 66 * a ** 2 - 12 * a) * s
        + c * (q ** 2 - p ** 2)
        - 12 * (57 * a ** 2 - 50 * a ** 3 - 18 * a ** 2 * n + 6 * a * n ** 2 + 30 * a * n - 11 * a
                - 2 * n ** 3 - 9 * n ** 2 - 13 * n - 1) * p
        + 12 * (57 * a ** 2 - 50 * a ** 3 - 11 * a - 1) * q
        + 78 * a * n ** 2 - 450 * a ** 2 * n + 606 * a * n - 14 * n ** 3 - 81 * n ** 2 - 205 * n,
        288,
    )


# -------------------------
# sum k^c psi0(k+a) psi0(k), semi-closed
# -------------------------

def a26(ev, n, a):
    p = ev.psi0(a + n + 1)
    h = ev.psi0(n + 1)
    return (
        a * residual(ev, n, a) + n * p * h - (a + n + 1) * p - n * h
        + (a + 1) * ev.psi0(a + 1) + 2 * n
    )


def a27(ev, n, a):
    p = ev.psi0(a + n + 1)
    h = ev.psi0(n + 1)
    return ev.frac(-a * (a - 1), 2) * residual(ev, n, a) + ev.frac(
        2 * n * (n + 1) * p * h + (a ** 2 - a - n ** 2 - 3 * n - 2) * p + (2 * a - n - 3) * n * h
        - (a - 2) * (a + 1) * ev.psi0(a + 1) + n ** 2 + 5 * n - 3 * a * n,
        4,
    )


def a28(ev, n, a):
    p = ev.psi0(a + n + 1)
    h = ev.psi0(n + 1)
    return ev.frac(a * (a - 1) * (2 * a - 1), 6) * residual(ev, n, a) + ev.frac(
        18 * n * (n + 1) * (2 * n + 1) * p * h
        - 3 * (4 * a ** 3 - 3 * a ** 2 - a + 4 * n ** 3 + 15 * n ** 2 + 17 * n + 6) * p
        + 3 * n * (6 * a * n + 24 * a - 12 * a ** 2 - 4 * n ** 2 - 15 * n - 17) * h
        + 3 * (4 * a ** 3 - 3 * a ** 2 - a + 6) * ev.psi0(a + 1)
        + n * (48 * a ** 2 - 15 * a * n - 96 * a + 8 * n ** 2 + 39 * n + 79),
        108,
    )


def a29(ev, n, a):
    p = ev.psi0(a + n + 1)
    h = ev.psi0(n + 1)
    return ev.frac(-1 * a ** 2 * (a - 1) ** 2, 4) * residual(ev, n, a) + ev.frac(
        72 * n ** 2 * (n + 1) ** 2 * p * h
        + 6 * (3 * a ** 4 - 2 * a ** 3 - 3 * a ** 2 + 2 * a - 3 * n ** 4 - 14 * n ** 3 - 21 * n ** 2 - 10 * n) * p
        + 6 * n * (12 * a ** 3 - 6 * a ** 2 * n - 30 * a ** 2 + 4 * a * n ** 2 + 18 * a * n + 26 * a
                   - 3 * n ** 3 - 14 * n ** 2 - 21 * n - 10) * h
        - 6 * a * (a - 1) * (a + 1) * (3 * a - 2) * ev.psi0(a + 1)
        + n * (27 * a ** 2 * n - 90 * a ** 3 + 219 * a ** 2 - 14 * a * n ** 2 - 81 * a * n - 205 * a
               + 9 * n ** 3 + 50 * n ** 2 + 111 * n + 118),
        288,
    )
