# identities/second_type.py
"""
Right-hand sides of S_f(m, n) = sum_{k=1}^{m} (n-k)!/(m-k)! f(k), m <= n.

b8..b11 carry psi(n-m) and need m < n; b7 is semi-closed in a shift a >= 0.
"""
from __future__ import annotations

from exact_core import ksum


def _ub1(ev, m, n):
    return ksum(1, m, lambda k: ev.frac(ev.psi0(k + n - m), k))


def b2(ev, m, n):
    """f(k) = 1."""
    return ev.frac(ev.fact(n), ev.fact(m - 1) * (n - m + 1))


def b3(ev, m, n):
    """f(k) = 1/k."""
    return ev.frac(ev.fact(n), ev.fact(m)) * (ev.psi0(n + 1) - ev.psi0(n - m + 1))


def b4(ev, m, n):
    """f(k) = psi0(k)."""
    d1 = n - m + 1
    return ev.frac(ev.fact(n), ev.fact(m - 1) * d1) * (
        ev.psi0(n + 1) - ev.psi0(d1) + ev.psi0(1) - ev.frac(1, d1)
    )


def b5(ev, m, n):
    """f(k) = psi0(k)/k."""
    p = ev.psi0(n + 1)
    q = ev.psi0(n - m + 1)
    return ev.frac(ev.fact(n), ev.fact(m)) * (
        ev.frac(ev.psi1(n + 1) - ev.psi1(n - m + 1) + p ** 2 + q ** 2, 2)
        + ev.psi0(1) * (p - q) - p * q
    )


def b6(ev, m, n):
    """f(k) = psi0(n+1-k)/k."""
    p = ev.psi0(n + 1)
    return ev.frac(ev.fact(n), ev.fact(m)) * (
        ev.psi1(n + 1) - ev.psi1(n - m + 1) + p * (p - ev.psi0(n - m + 1))
    )


def b7(ev, m, n, a):
    """f(k) = 1/(k+a)."""
    d = n - m
    return ev.frac(ev.fact(a + n), ev.fact(a + m)) * ksum(1, m, lambda k: ev.frac(
        ev.fact(k + d - 1) * ev.fact(k + a - 1),
        ev.fact(k - 1) * ev.fact(k + a + d),
    ))


def b8(ev, m, n):
    """f(k) = 1/k^2."""
    p = ev.psi0(n + 1)
    q = ev.psi0(n - m + 1)
    w = ev.frac(ev.fact(n), ev.fact(m))
    return w * _ub1(ev, m, n) + w * (
        ev.frac(ev.psi1(n - m + 1) - ev.psi1(n + 1) + q ** 2 - p ** 2, 2)
        + ev.psi0(n - m) * (p - ev.psi0(m + 1) - q + ev.psi0(1))
    )


def b9(ev, m, n):
    """f(k) = psi0(k)/k^2."""
    d = n - m
    p = ev.psi0(n + 1)
    q = ev.psi0(d + 1)
    r = ev.psi1(n + 1)
    s = ev.psi1(d + 1)
    g1 = ev.psi0(1)
    w = ev.frac(ev.fact(n), ev.fact(m))
    pair = ksum(1, m, lambda k: ev.frac(ev.psi1(k + d) + ev.psi0(k + d) ** 2, k))
    cube = ev.psi2(n + 1) - ev.psi2(d + 1) + p ** 3 - q ** 3 + 3 * p * r - 3 * q * s
    return (
        ev.frac(w, 2) * pair
        - w * (ev.psi0(d) - g1) * _ub1(ev, m, n)
        + ev.frac(w, 2) * (
            ev.frac(-1 * cube, 3)
            + (ev.psi0(d) - g1) * (r - s + p ** 2 - q ** 2)
            - (ev.psi1(d) - ev.psi0(d) ** 2 + 2 * g1 * ev.psi0(d)) * (ev.psi0(m + 1) - p + q - g1)
        )
    )


def b10(ev, m, n):
    """f(k) = psi0(n+1-k)/k^2."""
    d = n - m
    p = ev.psi0(n + 1)
    q = ev.psi0(d + 1)
    r = ev.psi1(n + 1)
    s = ev.psi1(d + 1)
    g1 = ev.psi0(1)
    pm = ev.psi0(m + 1)
    w = ev.frac(ev.fact(n), ev.fact(m))
    pair = ksum(1, m, lambda k: ev.frac(ev.psi1(k + d) + p * ev.psi0(k + d), k))
    return w * pair + w * (
        ev.frac(ev.psi2(d + 1) - ev.psi2(n + 1), 2) + q * s
        + p * (
            ev.frac(s - r + q ** 2 - p ** 2, 2)
            + ev.psi0(d) * (p - q - pm + g1)
            + ev.psi1(d) - r
        )
        - ev.psi1(d) * (q + pm - g1)
        + ev.psi0(d) * (r - s)
    )


def b11(ev, m, n):
    """f(k) = psi1(k)."""
    d = n - m
    pn = ev.psi0(n)
    q = ev.psi0(d + 1)
    w = ev.frac(ev.fact(n), ev.fact(m - 1) * (d + 1))
    return -1 * w * _ub1(ev, m, n) - w * (
        ev.frac(ev.psi1(d + 1) - ev.psi1(n) - pn ** 2 + q ** 2, 2)
        + ev.psi0(d) * (pn - ev.psi0(m) - q + ev.psi0(1))
        - ev.psi1(1) - ev.frac(pn - q, n) - ev.frac(pn, m)
    )
