# identities/milgram.py
"""Digamma sums over 1/(k+a) that close or pair up."""
from __future__ import annotations


def pair_sum(ev, m, a, b):
    """sum psi0(k+a)/(k+b) + psi0(k+b)/(k+a), a != b."""
    pa = ev.psi0(a + m + 1)
    pb = ev.psi0(b + m + 1)
    qa = ev.psi0(a + 1)
    qb = ev.psi0(b + 1)
    return pa * pb - qa * qb + ev.frac(pa - pb - qa + qb, a - b)


def diagonal_sum(ev, m, a):
    """sum psi0(k+a)/(k+a)."""
    p = ev.psi0(a + m + 1)
    q = ev.psi0(a + 1)
    return ev.frac(ev.psi1(a + m + 1) - ev.psi1(a + 1) + p ** 2 - q ** 2, 2)


def squared_pair_sum(ev, m, a):
    """sum (psi0(k+a)^2 + psi1(k+a))/(k+a)."""
    p = ev.psi0(a + m + 1)
    q = ev.psi0(a + 1)
    return ev.frac(
        ev.psi2(a + m + 1) - ev.psi2(a + 1)
        + 3 * p * ev.psi1(a + m + 1) - 3 * q * ev.psi1(a + 1)
        + p ** 3 - q ** 3,
        3,
    )
