# block_integrals.py
"""
Finite-sum forms of the log-weighted Laguerre integrals that feed I_A, I_B and I_C.

    C_{m-1,m-1}, C_{m-2,m}   at alpha = beta = n-m+1, q = n-m+3      (ias1, ias2)
    A_{k,k}, A_{j,j+1}, A_{j,j+k+1}  at alpha = beta = n-m, q = n-m+1  (ibs1, ibs3, ibs4)
    B_{k,k}, B_{j,j+1}, B_{j,j+2}, B_{j,j+k+1}  at q = n-m+2          (ibs2, ibs5, ibs6, ibs7)

Every function takes an evaluation backend `ev` (exact_core.EXACT or exact_core.FLOAT)
and is written only with ev.frac / ev.fact / ev.psi* so both backends share one text.
"""
from __future__ import annotations

from exact_core import ksum


def _p2(ev, x):
    # Gamma''(x)/Gamma(x)
    return ev.psi0(x) ** 2 + ev.psi1(x)


def _p3(ev, x):
    # Gamma'''(x)/Gamma(x)
    return ev.psi0(x) ** 3 + 3 * ev.psi0(x) * ev.psi1(x) + ev.psi2(x)


def ias1(ev, m, n):
    """int x^(n-m+3) e^-x ln^3 x (L_{m-1}^(n-m+1))^2 dx."""
    bracket = (
        18 * m ** 2 * n + 39 * m ** 2 - 30 * m * n - 57 * m + 12 * n + 30
        + 3 * (13 * m ** 2 * n + 12 * m ** 2 + 4 * m * n ** 2 - 3 * m * n - 4 * m - 4 * n ** 2 + 2 * n + 4) * ev.psi0(n)
        + 6 * (3 * m ** 2 * n + m ** 2 + 4 * m * n ** 2 + 3 * m * n + m - n ** 2) * _p2(ev, n)
        + 2 * n * (m ** 2 + 4 * m * n + m + n ** 2 - n) * _p3(ev, n)
    )
    tail = ksum(1, m - 3, lambda k: ev.frac(6 * ev.fact(n - k), ev.fact(m - 3 - k)) * (
        ev.frac(3, k + 2) - ev.frac(3, k) + ev.frac(1, k ** 2) + ev.frac(4, (k + 1) ** 2) + ev.frac(1, (k + 2) ** 2)
    ) * (ev.psi0(n + 1 - k) - 2 * ev.psi0(k) + 2 * ev.psi0(1) + 3))
    return ev.frac(ev.fact(n - 1), 2 * ev.fact(m - 1)) * bracket + tail


def ias2(ev, m, n):
    """int x^(n-m+3) e^-x ln^3 x L_{m-2}^(n-m+1) L_m^(n-m+1) dx, m >= 2."""
    tail = ksum(1, m - 4, lambda k: ev.frac(ev.fact(n - k - 1), ev.fact(m - k - 4)) * (
        ev.frac(1, 2 * k) - ev.frac(4, k + 1) + ev.frac(4, k + 3) - ev.frac(1, 2 * (k + 4)) + ev.frac(6, (k + 2) ** 2)
    ) * (ev.psi0(n - k) - ev.psi0(k + 2) - ev.psi0(k) + 2 * ev.psi0(1) + 3))
    bracket = (
        40 * m * n - m ** 2 + 69 * m - 32 * n - 38
        + 8 * (8 * m * n - m ** 2 + 9 * m + 3 * n ** 2 + 5 * n + 1) * ev.psi0(n)
        + 2 * (8 * m * n - m ** 2 + 5 * m + 18 * n ** 2 + 26 * n + 6) * _p2(ev, n)
        + 8 * n * (n + 1) * _p3(ev, n)
    )
    return ev.frac(ev.fact(n - 1), 8 * ev.fact(m - 2)) * bracket + tail


def ibs1(ev, m, n, k):
    """A_{k,k}(n-m+1)."""
    d = n - m
    return ev.frac(ev.fact(k + d), ev.fact(k)) * ((2 * k + d + 1) * ev.psi0(k + d + 1) + 2 * k + 1)


def ibs2(ev, m, n, k):
    """B_{k,k}(n-m+2)."""
    d = n - m
    tail = ksum(3, k, lambda i: ev.frac(2 * ev.fact(k - i + d + 2), ev.fact(k - i)) * (
        ev.frac(3, i) - ev.frac(3, i - 2) + ev.frac(1, i ** 2) + ev.frac(4, (i - 1) ** 2) + ev.frac(1, (i - 2) ** 2)
    ))
    bracket = (
        ev.frac(17 * k ** 2 + k * (4 * d + 7) + 4, 2)
        + 2 * (7 * k ** 2 + k * (4 * d + 7) + 2 * d + 3) * ev.psi0(k + d + 1)
        + (6 * k ** 2 + 6 * k * (d + 1) + (d + 2) * (d + 1)) * _p2(ev, k + d + 1)
    )
    return ev.frac(ev.fact(k + d), ev.fact(k)) * bracket + tail


def ibs3(ev, m, n, j):
    """A_{j,j+1}(n-m+1)."""
    d = n - m
    return ev.frac(ev.fact(j + d), ev.fact(j)) * (
        -(j + d + 1) * ev.psi0(j + d + 1) - ev.frac(3 * j, 2) - d - 2
    )


def ibs4(ev, m, n, j, k):
    """A_{j,j+k+1}(n-m+1), k > 0; rational."""
    d = n - m
    return ev.frac(ev.fact(j + d), ev.fact(j) * (k + 1)) * (ev.frac(j + d + 1, k) - ev.frac(j, k + 2))


def ibs5(ev, m, n, j):
    """B_{j,j+1}(n-m+2)."""
    d = n - m
    bracket = (
        ev.frac(7 * j ** 2, 2) + ev.frac(5 * j * (d + 3), 2) + 2 * d + 5
        + (ev.frac(16 * j ** 2, 3) + j * (6 * d + ev.frac(38, 3)) + d ** 2 + 7 * d + 8) * ev.psi0(j + d + 1)
        + (j + d + 1) * (2 * j + d + 2) * _p2(ev, j + d + 1)
    )
    tail = ksum(3, j, lambda l: ev.frac(2 * ev.fact(j - l + d + 2), ev.fact(j - l)) * (
        ev.frac(-1, 3 * (l + 1)) - ev.frac(3, l) + ev.frac(3, l - 1) + ev.frac(1, 3 * (l - 2))
        - ev.frac(2, l ** 2) - ev.frac(2, (l - 1) ** 2)
    ))
    return ev.frac(-2 * ev.fact(j + d), ev.fact(j)) * bracket + tail


def ibs6(ev, m, n, j):
    """B_{j,j+2}(n-m+2)."""
    d = n - m
    bracket = (
        ev.frac(10 * j ** 2, 3) + ev.frac(2 * j * (7 * d + 20), 3) + d ** 2 + 9 * d + 13
        + ev.frac(25 * j ** 2 + j * (44 * d + 87) + 6 * (d + 3) * (3 * d + 4), 6) * ev.psi0(j + d + 1)
        + (j + d + 1) * (j + d + 2) * _p2(ev, j + d + 1)
    )
    tail = ksum(3, j, lambda l: ev.frac(4 * ev.fact(j - l + d + 2), ev.fact(j - l)) * (
        ev.frac(1, 3 * (l + 1)) - ev.frac(1, 24 * (l + 2)) - ev.frac(1, 3 * (l - 1)) + ev.frac(1, 24 * (l - 2))
        + ev.frac(1, 2 * l ** 2)
    ))
    return ev.frac(ev.fact(j + d), ev.fact(j)) * bracket + tail


def ibs7(ev, m, n, j, k):
    """B_{j,j+k+1}(n-m+2), k > 1."""
    d = n - m
    g1 = ev.psi0(1)
    poch5 = (k - 1) * k * (k + 1) * (k + 2) * (k + 3)
    bracket = (
        j ** 2 * (k ** 2 - 7 * k + 24 * g1 + 56)
        + j * (
            k ** 2 * (-2 * d - 5)
            + k * (18 * d + 55 + 12 * (d + 2) * g1)
            + 4 * (3 * (3 * d + 4) * g1 + 18 * d + 31)
        )
        + (k + 2) * (k + 3) * ((3 * d + 4) * (d + 3) + 2 * (d + 1) * (d + 2) * g1)
        + 2 * (12 * j ** 2 + 6 * j * (k * (d + 2) + 3 * d + 4) + (k + 2) * (k + 3) * (d + 1) * (d + 2))
        * (ev.psi0(j + d + 1) - ev.psi0(k - 1))
    )
    tail = ksum(3, j, lambda l: ev.frac(
        8 * ev.fact(j - l + d + 2),
        ev.fact(j - l) * (l - 2) * (l - 1) * l * (k + l - 1) * (k + l) * (k + l + 1),
    ))
    return ev.frac(-2 * ev.fact(j + d), ev.fact(j) * poch5) * bracket + tail
