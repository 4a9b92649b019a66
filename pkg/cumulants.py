# cumulants.py
"""
Exact cumulants of the von Neumann entropy S over the fixed-trace ensemble and of the
induced entropy T = sum theta ln theta over the Wishart-Laguerre ensemble, plus the
change-of-measure conversions between their moments.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from exact_core import PolyValue, gamma_log_ratio, pochhammer, psi_int, to_float


@dataclass(frozen=True)
class Dims:
    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("m", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"[cumulants] Dims: {name} must be int, got {type(v).__name__}")
        if not 1 <= self.m <= self.n:
            raise ValueError(f"[cumulants] Dims: need 1 <= m <= n, got m={self.m}, n={self.n}")

    @property
    def mn(self) -> int:
        return self.m * self.n


@dataclass(frozen=True)
class CumulantSet:
    kappa1: PolyValue
    kappa2: PolyValue
    kappa3: PolyValue
    skewness_float: float  # nan when m = 1


@dataclass(frozen=True)
class TCumulantSet:
    kappa1T: PolyValue
    kappa2T: PolyValue
    kappa3T: PolyValue


# -------------------------
# Cumulants of S
# -------------------------

def kappa1(d: Dims) -> PolyValue:
    m, n = d.m, d.n
    return psi_int(0, m * n + 1) - psi_int(0, n) - Fraction(m + 1, 2 * n)


def kappa2(d: Dims) -> PolyValue:
    m, n = d.m, d.n
    mn = m * n
    return (
        -psi_int(1, mn + 1)
        + Fraction(m + n, mn + 1) * psi_int(1, n)
        - Fraction((m + 1) * (m + 2 * n + 1), 4 * n * n * (mn + 1))
    )


def kappa3(d: Dims) -> PolyValue:
    m, n = d.m, d.n
    mn = m * n
    c_psi2 = Fraction(m * m + 3 * mn + n * n + 1, (mn + 1) * (mn + 2))
    c_psi1 = Fraction((m * m - 1) * (mn - 3 * n * n + 1), n * (mn + 1) ** 2 * (mn + 2))
    poly = (
        2 * m ** 3 * n + 3 * m * m * n * n + 2 * m * m + 4 * m * n ** 3
        + 15 * m * n * n + 12 * mn - 2 * n * n + 6 * n + 6
    )
    c_rat = Fraction((m + 1) * poly, 4 * n ** 3 * (mn + 1) ** 2 * (mn + 2))
    return psi_int(2, mn + 1) - c_psi2 * psi_int(2, n) + c_psi1 * psi_int(1, n + 1) - c_rat


def cumulant_set(d: Dims) -> CumulantSet:
    k1, k2, k3 = kappa1(d), kappa2(d), kappa3(d)
    skew = skewness(d) if d.m > 1 else float("nan")
    return CumulantSet(kappa1=k1, kappa2=k2, kappa3=k3, skewness_float=skew)


def standardized_cumulant(d: Dims, j: int = 3) -> float:
    """kappa_j / kappa_2^(j/2); only j = 3 has a closed form here."""
    if j != 3:
        raise ValueError(f"[cumulants] standardized_cumulant: only j = 3 is available, got {j}")
    if d.m < 2:
        raise ValueError(f"[cumulants] standardized cumulant undefined for m = 1 (zero variance), n={d.n}")
    k2 = to_float(kappa2(d))
    if not k2 > 0.0:
        raise ValueError(f"[cumulants] non-positive variance {k2} at (m, n) = ({d.m}, {d.n})")
    return to_float(kappa3(d)) / k2 ** 1.5


def skewness(d: Dims) -> float:
    return standardized_cumulant(d, 3)


# -------------------------
# Moment <-> cumulant
# -------------------------

def moments_from_cumulants(k1: Any, k2: Any, k3: Any) -> Tuple[Any, Any, Any]:
    return k1, k2 + k1 * k1, k3 + 3 * k2 * k1 + k1 * k1 * k1


def cumulants_from_moments(m1: Any, m2: Any, m3: Any) -> Tuple[Any, Any, Any]:
    return m1, m2 - m1 * m1, m3 - 3 * m2 * m1 + 2 * m1 * m1 * m1


# -------------------------
# Induced entropy T
# -------------------------

def gamma_log_moment(a: int, k: int) -> PolyValue:
    """int_0^inf e^-r r^(a-1) ln^k r dr / Gamma(a)."""
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"[cumulants] gamma_log_moment: a must be an int >= 1, got {a!r}")
    if k not in (0, 1, 2, 3):
        raise ValueError(f"[cumulants] gamma_log_moment: log power must be in 0..3, got {k!r}")
    return gamma_log_ratio(a, k)


def t_moments(d: Dims) -> Tuple[PolyValue, PolyValue]:
    """(E_g[T], E_g[T^2]) over the Wishart-Laguerre ensemble."""
    m, n = d.m, d.n
    p0, p1 = psi_int(0, n), psi_int(1, n)
    et1 = m * n * p0 + Fraction(m * (m + 1), 2)
    et2 = (
        m * n * (m + n) * p1
        + m * n * (m * n + 1) * p0 * p0
        + m * (m * m * n + m * n + m + 2 * n + 1) * p0
        + Fraction(m * (m + 1) * (m * m + m + 2), 4)
    )
    return et1, et2


def t_cumulants(d: Dims) -> TCumulantSet:
    m, n = d.m, d.n
    p0, p1, p2 = psi_int(0, n), psi_int(1, n), psi_int(2, n)
    k1t = m * n * p0 + Fraction(m * (m + 1), 2)
    k2t = m * n * (m + n) * p1 + m * n * p0 * p0 + m * (m + 2 * n + 1) * p0 + Fraction(m * (m + 1), 2)
    k3t = (
        m * n * (m * m + 3 * m * n + n * n + 1) * p2
        + 6 * m * n * (m + n) * p0 * p1
        + m * (2 * m * m + 12 * m * n + 3 * m + 6 * n * n + 3 * n + 1) * p1
        + 2 * m * n * p0 ** 3
        + 3 * m * (m + 3 * n + 1) * p0 * p0
        + 6 * m * (m + n + 1) * p0
        + m * (m + 1)
    )
    return TCumulantSet(kappa1T=k1t, kappa2T=k2t, kappa3T=k3t)


# -------------------------
# Change of measure S <-> T
# -------------------------
# r = tr(YY^+) ~ Gamma(mn) is independent of the fixed-trace spectrum and
# T = r ln r - r S, so E_g[r^k (ln r - S)^k] factorizes.

def moment1_S(d: Dims, et1: PolyValue) -> PolyValue:
    mn = d.mn
    return gamma_log_moment(mn + 1, 1) - et1 / mn


def moment2_S(d: Dims, et2: PolyValue) -> PolyValue:
    mn = d.mn
    es1 = kappa1(d)
    return et2 / pochhammer(mn, 2) + 2 * gamma_log_moment(mn + 2, 1) * es1 - gamma_log_moment(mn + 2, 2)


def moment3_S(d: Dims, et3: PolyValue) -> PolyValue:
    mn = d.mn
    a = mn + 3
    es1 = kappa1(d)
    es2 = kappa2(d) + es1 * es1
    return (
        -et3 / pochhammer(mn, 3)
        + 3 * gamma_log_moment(a, 1) * es2
        - 3 * gamma_log_moment(a, 2) * es1
        + gamma_log_moment(a, 3)
    )


def kappa1_via_T(d: Dims) -> PolyValue:
    et1, _ = t_moments(d)
    return moment1_S(d, et1)


def kappa2_via_T(d: Dims) -> PolyValue:
    et1, et2 = t_moments(d)
    s1 = moment1_S(d, et1)
    return moment2_S(d, et2) - s1 * s1


def kappa3_via_T(d: Dims, tc: TCumulantSet | None = None) -> PolyValue:
    """Third cumulant of S from the first three cumulants of T (pass tc to use other kappa3T values)."""
    tc = tc or t_cumulants(d)
    mn = d.mn
    k1t, k2t, k3t = tc.kappa1T, tc.kappa2T, tc.kappa3T
    inner = (
        -k3t
        + Fraction(6, mn) * k1t * k2t
        + Fraction(3 * (2 * mn + 3), mn + 1) * k2t
        - Fraction(4, mn * mn) * k1t ** 3
        - Fraction(3 * (3 * mn + 4), mn * (mn + 1)) * k1t * k1t
        - Fraction(6 * (mn + 2), mn + 1) * k1t
    )
    return inner / pochhammer(mn, 3) + psi_int(2, mn + 1)


def kappa3_via_moments(d: Dims, tc: TCumulantSet | None = None) -> PolyValue:
    """Same quantity through E_g[T^3] -> E_f[S^3] -> kappa3."""
    tc = tc or t_cumulants(d)
    _, _, et3 = moments_from_cumulants(tc.kappa1T, tc.kappa2T, tc.kappa3T)
    es1 = kappa1(d)
    es2 = kappa2(d) + es1 * es1
    _, _, k3 = cumulants_from_moments(es1, es2, moment3_S(d, et3))
    return k3


# -------------------------
# Scaling along m = c n
# -------------------------

def scaling_rows(c_ratio: Fraction | float | str, n_list: Sequence[int]) -> List[Dict[str, Any]]:
    """Closed-form rows n, m, kappa2, n^2 kappa2, kappa3, n^4 kappa3, gamma1, n gamma1."""
    c = Fraction(c_ratio) if not isinstance(c_ratio, float) else Fraction(c_ratio).limit_denominator(10 ** 6)
    rows: List[Dict[str, Any]] = []
    for n in n_list:
        m_exact = c * n
        if m_exact.denominator != 1:
            raise ValueError(f"[cumulants] scaling_rows: m = {c} * {n} is not an integer")
        d = Dims(int(m_exact), int(n))
        k2 = to_float(kappa2(d))
        k3 = to_float(kappa3(d))
        g1 = k3 / k2 ** 1.5 if d.m > 1 else math.nan
        rows.append({
            "n": n, "m": d.m,
            "kappa2": k2, "n2_kappa2": n * n * k2,
            "kappa3": k3, "n4_kappa3": n ** 4 * k3,
            "gamma1": g1, "n_gamma1": n * g1,
        })
    return rows
