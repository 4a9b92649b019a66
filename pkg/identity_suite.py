# identity_suite.py
"""
Brute-force and closed-form evaluators for the polygamma summation identities, with a
data-driven registry and exhaustive range sweeps.

First type:   sum_{k=1}^{n} k^c prod psi_j(k+a)^b             (A2..A29)
Second type:  sum_{k=1}^{m} (n-k)!/(m-k)! f(k),  m <= n        (B2..B11)
Milgram:      digamma sums over 1/(k+a) that close or pair up  (M1..M3)

Every identity is a record (id, brute-force side, closed side, parameter domain); sweeps
compare the two sides exactly and report failures as data.
"""
from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import config
from exact_core import EXACT, FLOAT, PolyValue, ksum
from identities import first_type, milgram, second_type

Params = Dict[str, Any]


# -------------------------
# Reports
# -------------------------

def _show(v: Any) -> Any:
    if isinstance(v, PolyValue):
        return v.canonical()
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _show(x) for k, x in v.items()}
    if isinstance(v, int):
        return v
    return str(v)


def _close(lhs: Any, rhs: Any, rtol: float) -> bool:
    x, y = float(lhs), float(rhs)
    return abs(x - y) <= rtol * max(1.0, abs(y))


@dataclass
class IdentityReport:
    identity_id: str
    grid: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, params: Params, lhs: Any, rhs: Any, rtol: Optional[float] = None) -> bool:
        try:
            same = bool(lhs == rhs) if rtol is None else _close(lhs, rhs, rtol)
        except (TypeError, ValueError):
            same = False
        if same:
            self.passed += 1
            return True
        self.failed += 1
        if self.counterexample is None:
            self.counterexample = {"params": _show(params), "lhs": _show(lhs), "rhs": _show(rhs)}
        if config.DEBUG:
            print(f"[identity_suite] FAIL {self.identity_id} at {params}", flush=True)
        return False

    def to_json(self) -> Dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "grid": self.grid,
            "pass": self.passed,
            "fail": self.failed,
            "counterexample": self.counterexample,
        }


# -------------------------
# First type
# -------------------------

@dataclass(frozen=True)
class FirstTypeSpec:
    """sum_{k=1}^{n} k^c prod_i psi_{j_i}(k + a_i)^{b_i}."""
    c: int
    factors: Tuple[Tuple[int, Any, int], ...]
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.c, int) or self.c < 0:
            raise ValueError(f"[identity_suite] FirstTypeSpec: c must be an int >= 0, got {self.c!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"[identity_suite] FirstTypeSpec: n must be an int >= 0, got {self.n!r}")
        if not self.factors:
            raise ValueError("[identity_suite] FirstTypeSpec: need at least one factor")
        for j, a, b in self.factors:
            if j not in (0, 1, 2) or not isinstance(b, int) or b < 1 or a < 0:
                raise ValueError(f"[identity_suite] FirstTypeSpec: bad factor (j={j}, a={a}, b={b})")


def _psi(ev: Any, j: int, x: Any) -> Any:
    return (ev.psi0, ev.psi1, ev.psi2)[j](x)


def sum_type1_bruteforce(spec: FirstTypeSpec, ev: Any = EXACT) -> Any:
    def term(k: int) -> Any:
        out: Any = k ** spec.c
        for j, a, b in spec.factors:
            out = out * _psi(ev, j, k + a) ** b
        return out
    return ksum(1, spec.n, term)


# c and the (order, power) factors at shift a; A26..A29 also carry psi0(k)
_FIRST_SHAPES: Dict[str, Tuple[int, Tuple[Tuple[int, int], ...]]] = {}
for _i, _shape in enumerate((((0, 1),), ((0, 2),), ((0, 3),), ((1, 1),), ((2, 1),), ((0, 1), (1, 1)))):
    for _c in range(4):
        _FIRST_SHAPES[f"A{2 + 4 * _i + _c}"] = (_c, _shape)
CLOSED_FIRST = tuple(f"A{i}" for i in range(2, 26))
SEMI_FIRST = ("A26", "A27", "A28", "A29")


def first_type_spec(identity_id: str, n: int, a: Any) -> FirstTypeSpec:
    if identity_id in SEMI_FIRST:
        return FirstTypeSpec(int(identity_id[1:]) - 26, ((0, a, 1), (0, 0, 1)), n)
    if identity_id not in _FIRST_SHAPES:
        raise ValueError(f"[identity_suite] unknown first-type identity {identity_id!r}")
    c, shape = _FIRST_SHAPES[identity_id]
    return FirstTypeSpec(c, tuple((j, a, b) for j, b in shape), n)


def _check_first(identity_id: str, allowed: Sequence[str], n: int, a: Any) -> None:
    if identity_id not in allowed:
        raise ValueError(f"[identity_suite] {identity_id!r} is not one of {allowed[0]}..{allowed[-1]}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"[identity_suite] {identity_id}: n must be an int >= 1, got {n!r}")
    if a < 0:
        raise ValueError(f"[identity_suite] {identity_id}: shift a must be >= 0, got {a!r}")


def sum_type1_closed(identity_id: str, n: int, a: Any, ev: Any = EXACT) -> Any:
    _check_first(identity_id, CLOSED_FIRST, n, a)
    return getattr(first_type, identity_id.lower())(ev, n, a)


def sum_type1_semi(identity_id: str, n: int, a: Any, ev: Any = EXACT) -> Any:
    """Semi-closed form; the residual sum_{k<=n} psi0(k)/(k+a) is summed directly."""
    _check_first(identity_id, SEMI_FIRST, n, a)
    return getattr(first_type, identity_id.lower())(ev, n, a)


# -------------------------
# Second type
# -------------------------

_TEST_FUNCTIONS: Dict[str, Callable[[Any, Any, int, Any], Any]] = {
    "B2": lambda ev, n, k, a: 1,
    "B3": lambda ev, n, k, a: ev.frac(1, k),
    "B4": lambda ev, n, k, a: ev.psi0(k),
    "B5": lambda ev, n, k, a: ev.frac(ev.psi0(k), k),
    "B6": lambda ev, n, k, a: ev.frac(ev.psi0(n + 1 - k), k),
    "B7": lambda ev, n, k, a: ev.frac(1, k + a),
    "B8": lambda ev, n, k, a: ev.frac(1, k * k),
    "B9": lambda ev, n, k, a: ev.frac(ev.psi0(k), k * k),
    "B10": lambda ev, n, k, a: ev.frac(ev.psi0(n + 1 - k), k * k),
    "B11": lambda ev, n, k, a: ev.psi1(k),
}
CLOSED_SECOND = ("B2", "B3", "B4", "B5", "B6")
SEMI_SECOND = ("B7", "B8", "B9", "B10", "B11")
# right-hand sides with psi_j(n-m)
_NEEDS_GAP = ("B8", "B9", "B10", "B11")


@dataclass(frozen=True)
class SecondTypeSpec:
    """sum_{k=1}^{m} (n-k)!/(m-k)! f(k); n may be real for the float backend."""
    m: int
    n: Any
    test_function_id: str
    shift: int = 0

    def __post_init__(self) -> None:
        if self.test_function_id not in _TEST_FUNCTIONS:
            raise ValueError(
                f"[identity_suite] SecondTypeSpec: unknown test function {self.test_function_id!r}; "
                f"expected one of {sorted(_TEST_FUNCTIONS)}"
            )
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"[identity_suite] SecondTypeSpec: m must be an int >= 1, got {self.m!r}")
        if self.n < self.m:
            raise ValueError(f"[identity_suite] SecondTypeSpec: need m <= n, got m={self.m}, n={self.n}")
        if self.shift < 0:
            raise ValueError(f"[identity_suite] SecondTypeSpec: shift must be >= 0, got {self.shift}")


def sum_type2_bruteforce(spec: SecondTypeSpec, ev: Any = EXACT) -> Any:
    m, n = spec.m, spec.n
    f = _TEST_FUNCTIONS[spec.test_function_id]
    kern: Any = ev.fact(n - m)
    total: Any = 0
    # kernel built from k = m downwards: K(k) = K(k+1) (n-k)/(m-k)
    for k in range(m, 0, -1):
        if k < m:
            kern = ev.frac(kern * (n - k), m - k)
        total = total + kern * f(ev, n, k, spec.shift)
    return total


def _check_second(identity_id: str, allowed: Sequence[str], m: int, n: Any) -> None:
    if identity_id not in allowed:
        raise ValueError(f"[identity_suite] {identity_id!r} is not one of {allowed[0]}..{allowed[-1]}")
    if not isinstance(m, int) or m < 1 or n < m:
        raise ValueError(f"[identity_suite] {identity_id}: need integer m >= 1 and m <= n, got m={m!r}, n={n!r}")
    if identity_id in _NEEDS_GAP and n == m:
        raise ValueError(f"[identity_suite] {identity_id}: right-hand side carries psi(n-m); needs m < n, got m = n = {m}")


def sum_type2_closed(identity_id: str, m: int, n: Any, ev: Any = EXACT) -> Any:
    _check_second(identity_id, CLOSED_SECOND, m, n)
    return getattr(second_type, identity_id.lower())(ev, m, n)


def sum_type2_semi(identity_id: str, m: int, n: Any, a: int = 0, ev: Any = EXACT) -> Any:
    _check_second(identity_id, SEMI_SECOND, m, n)
    if identity_id == "B7":
        if not isinstance(a, int) or a < 0:
            raise ValueError(f"[identity_suite] B7: shift a must be an int >= 0, got {a!r}")
        return second_type.b7(ev, m, n, a)
    return getattr(second_type, identity_id.lower())(ev, m, n)


# (m+a) S(m,n) - (n+a) S(m-1,n-1) = sum (k+a) f(k) [K(m,n,k) - K(m-1,n-1,k)]
_RECURRENCE_SOURCE = {"B3": second_type.b2, "B7": second_type.b2, "B5": second_type.b4, "B8": second_type.b3}


def sum_type2_recurrence(identity_id: str, m: int, n: int, a: int = 0, ev: Any = EXACT) -> Any:
    """
    Iterate S(i, n-m+i) upward from S(0, n-m) = 0. The inhomogeneous part is the difference
    of a lower closed form: B2 for B3/B7, B4 for B5 and B3 for B8.
    """
    if identity_id not in _RECURRENCE_SOURCE:
        raise ValueError(f"[identity_suite] no recurrence for {identity_id!r}; expected one of {sorted(_RECURRENCE_SOURCE)}")
    if not isinstance(m, int) or not isinstance(n, int) or not 1 <= m <= n:
        raise ValueError(f"[identity_suite] {identity_id}: need integers 1 <= m <= n, got m={m!r}, n={n!r}")
    if identity_id != "B7" and a:
        raise ValueError(f"[identity_suite] {identity_id}: shift is only defined for B7")
    lower = _RECURRENCE_SOURCE[identity_id]

    def closed(mm: int, nn: int) -> Any:
        return lower(ev, mm, nn) if mm >= 1 else 0

    s: Any = 0
    for i in range(1, m + 1):
        nn = n - m + i
        s = ev.frac((nn + a) * s + closed(i, nn) - closed(i - 1, nn - 1), i + a)
    return s


# -------------------------
# Milgram identities
# -------------------------

MILGRAM_VARIANTS = {"pair": "M1", "limit": "M2", "squared_pair": "M3"}


def milgram_identities(variant: str, m: int, a: Any, b: Any = None, ev: Any = EXACT) -> Tuple[Any, Any]:
    """(direct sum, closed form) for the paired, diagonal and squared-pair relations."""
    if variant not in MILGRAM_VARIANTS:
        raise ValueError(f"[identity_suite] unknown Milgram variant {variant!r}; expected one of {sorted(MILGRAM_VARIANTS)}")
    if not isinstance(m, int) or m < 0 or a < 0 or (b is not None and b < 0):
        raise ValueError(f"[identity_suite] {variant}: need m >= 0 and non-negative shifts, got m={m}, a={a}, b={b}")
    if variant == "pair":
        if b is None or a == b:
            raise ValueError(f"[identity_suite] pair variant needs a != b, got a={a}, b={b}")
        lhs = ksum(1, m, lambda k: ev.frac(ev.psi0(k + a), k + b) + ev.frac(ev.psi0(k + b), k + a))
        return lhs, milgram.pair_sum(ev, m, a, b)
    if variant == "limit":
        lhs = ksum(1, m, lambda k: ev.frac(ev.psi0(k + a), k + a))
        return lhs, milgram.diagonal_sum(ev, m, a)
    lhs = ksum(1, m, lambda k: ev.frac(ev.psi0(k + a) ** 2 + ev.psi1(k + a), k + a))
    return lhs, milgram.squared_pair_sum(ev, m, a)


# -------------------------
# Registry
# -------------------------

@dataclass(frozen=True)
class IdentityRecord:
    identity_id: str
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    domain: Callable[[int, int], List[Params]]
    describe: Callable[[int, int], str]


def _first_domain(max_n: int, max_a: int) -> List[Params]:
    return [{"n": n, "a": a} for a in range(max_a + 1) for n in range(1, max_n + 1)]


def _second_domain(strict: bool) -> Callable[[int, int], List[Params]]:
    def domain(max_n: int, max_a: int) -> List[Params]:
        return [{"m": m, "n": n} for n in range(1, max_n + 1) for m in range(1, n + 1) if not (strict and m == n)]
    return domain


def _shifted_domain(max_n: int, max_a: int) -> List[Params]:
    return [{"m": m, "n": n, "a": a} for n in range(1, max_n + 1) for m in range(1, n + 1) for a in range(max_a + 1)]


def _milgram_domain(variant: str) -> Callable[[int, int], List[Params]]:
    def domain(max_n: int, max_a: int) -> List[Params]:
        shifts = range(config.MILGRAM_MAX_SHIFT + 1)
        if variant == "pair":
            return [{"m": m, "a": a, "b": b} for m in range(config.MILGRAM_MAX_M + 1) for a in shifts for b in shifts if a != b]
        return [{"m": m, "a": a} for m in range(config.MILGRAM_MAX_M + 1) for a in shifts]
    return domain


def _registry() -> Dict[str, IdentityRecord]:
    out: Dict[str, IdentityRecord] = {}
    first_desc = lambda max_n, max_a: f"1 <= n <= {max_n}, 0 <= a <= {max_a}"
    for iid in CLOSED_FIRST + SEMI_FIRST:
        rhs_fn = sum_type1_semi if iid in SEMI_FIRST else sum_type1_closed
        out[iid] = IdentityRecord(
            iid,
            lhs=lambda n, a, iid=iid: sum_type1_bruteforce(first_type_spec(iid, n, a)),
            rhs=lambda n, a, iid=iid, fn=rhs_fn: fn(iid, n, a),
            domain=_first_domain,
            describe=first_desc,
        )
    for iid in CLOSED_SECOND + SEMI_SECOND:
        if iid == "B7":
            out[iid] = IdentityRecord(
                iid,
                lhs=lambda m, n, a: sum_type2_bruteforce(SecondTypeSpec(m, n, "B7", a)),
                rhs=lambda m, n, a: sum_type2_semi("B7", m, n, a),
                domain=_shifted_domain,
                describe=lambda max_n, max_a: f"1 <= m <= n <= {max_n}, 0 <= a <= {max_a}",
            )
            continue
        strict = iid in _NEEDS_GAP
        rhs_fn = sum_type2_semi if iid in SEMI_SECOND else sum_type2_closed
        out[iid] = IdentityRecord(
            iid,
            lhs=lambda m, n, iid=iid: sum_type2_bruteforce(SecondTypeSpec(m, n, iid)),
            rhs=lambda m, n, iid=iid, fn=rhs_fn: fn(iid, m, n),
            domain=_second_domain(strict),
            describe=(lambda max_n, max_a, op="<" if strict else "<=": f"1 <= m {op} n <= {max_n}"),
        )
    for iid in sorted(_RECURRENCE_SOURCE, key=lambda s: int(s[1:])):
        rid = f"{iid}/recurrence"
        if iid == "B7":
            out[rid] = IdentityRecord(
                rid,
                lhs=lambda m, n, a: sum_type2_bruteforce(SecondTypeSpec(m, n, "B7", a)),
                rhs=lambda m, n, a: sum_type2_recurrence("B7", m, n, a),
                domain=_shifted_domain,
                describe=lambda max_n, max_a: f"1 <= m <= n <= {max_n}, 0 <= a <= {max_a}",
            )
            continue
        out[rid] = IdentityRecord(
            rid,
            lhs=lambda m, n, iid=iid: sum_type2_bruteforce(SecondTypeSpec(m, n, iid)),
            rhs=lambda m, n, iid=iid: sum_type2_recurrence(iid, m, n),
            domain=_second_domain(False),
            describe=lambda max_n, max_a: f"1 <= m <= n <= {max_n}",
        )
    for variant, mid in MILGRAM_VARIANTS.items():
        out[mid] = IdentityRecord(
            mid,
            lhs=lambda variant=variant, **p: milgram_identities(variant, **p)[0],
            rhs=lambda variant=variant, **p: milgram_identities(variant, **p)[1],
            domain=_milgram_domain(variant),
            describe=lambda max_n, max_a: f"0 <= m <= {config.MILGRAM_MAX_M}, shifts <= {config.MILGRAM_MAX_SHIFT}",
        )
    return out


IDENTITIES: Dict[str, IdentityRecord] = _registry()


def verify_range(
    identity_id: str,
    grid: Optional[Iterable[Params]] = None,
    rhs: Optional[Callable[..., Any]] = None,
    max_n: int = config.IDENTITIES_MAX_N,
    max_a: int = config.IDENTITIES_MAX_A,
) -> IdentityReport:
    """
    Exhaustive exact comparison of brute force against the closed side over `grid`
    (default: the identity's own domain). `rhs` replaces the closed side, e.g. with a
    corrupted formula to show that it is caught.
    """
    rec = IDENTITIES.get(identity_id)
    if rec is None:
        raise ValueError(f"[identity_suite] unknown identity {identity_id!r}")
    if grid is None:
        points = rec.domain(max_n, max_a)
        desc = rec.describe(max_n, max_a)
    else:
        points = list(grid)
        desc = f"{len(points)} given points"
    if not points:
        raise ValueError(f"[identity_suite] {identity_id}: empty parameter grid")
    right = rhs or rec.rhs
    report = IdentityReport(identity_id, desc)
    for p in points:
        report.record(p, rec.lhs(**p), right(**p))
    return report


# -------------------------
# Float checks at real parameters
# -------------------------

_DERIV_STEP = 1e-5
_DERIV_RTOL = 1e-5
_REAL_RTOL = 1e-9
REAL_SHIFTS = (0.5, 1.5, 2.75, 4.2)
REAL_GAPS = (0.5, 1.25, 2.5, 3.75)


def float_checks(max_n: int = 12, max_m: int = 8) -> List[IdentityReport]:
    """Derivative relations in a and n, and validity of A2, A14, B3, B8 at non-integer parameters."""
    h = _DERIV_STEP
    reports: List[IdentityReport] = []

    da = IdentityReport("A22-A25/d-da", f"n <= {max_n}, a in {list(REAL_SHIFTS)}")
    for a in REAL_SHIFTS:
        for n in range(1, max_n + 1):
            for base, deriv in (("a6", "a22"), ("a7", "a23"), ("a8", "a24"), ("a9", "a25")):
                f = getattr(first_type, base)
                num = (f(FLOAT, n, a + h) - f(FLOAT, n, a - h)) / (2 * h)
                da.record({"id": deriv.upper(), "n": n, "a": a}, num, 2 * getattr(first_type, deriv)(FLOAT, n, a), _DERIV_RTOL)
    reports.append(da)

    for iid in ("A2", "A14"):
        rep = IdentityReport(f"{iid}/real-a", f"n <= {max_n}, a in {list(REAL_SHIFTS)}")
        for a in REAL_SHIFTS:
            for n in range(1, max_n + 1):
                lhs = sum_type1_bruteforce(first_type_spec(iid, n, a), FLOAT)
                rep.record({"n": n, "a": a}, lhs, sum_type1_closed(iid, n, a, FLOAT), _REAL_RTOL)
        reports.append(rep)

    for iid in ("B3", "B8"):
        rep = IdentityReport(f"{iid}/real-n", f"m <= {max_m}, n - m in {list(REAL_GAPS)}")
        for m in range(1, max_m + 1):
            for gap in REAL_GAPS:
                n = m + gap
                lhs = sum_type2_bruteforce(SecondTypeSpec(m, n, iid), FLOAT)
                rep.record({"m": m, "n": n}, lhs, getattr(second_type, iid.lower())(FLOAT, m, n), _REAL_RTOL)
        reports.append(rep)

    for base, deriv in (("b3", "B6"), ("b8", "B10")):
        rep = IdentityReport(f"{deriv}/d-dn", f"m <= {max_m}, n - m in {list(REAL_GAPS)}")
        f = getattr(second_type, base)
        for m in range(1, max_m + 1):
            for gap in REAL_GAPS:
                n = m + gap
                num = (f(FLOAT, m, n + h) - f(FLOAT, m, n - h)) / (2 * h)
                rep.record({"m": m, "n": n}, num, getattr(second_type, deriv.lower())(FLOAT, m, n), _DERIV_RTOL)
        reports.append(rep)
    return reports


def verify_identities(
    max_n: int = config.IDENTITIES_MAX_N,
    max_a: int = config.IDENTITIES_MAX_A,
    threads: int = 1,
    include_float: bool = True,
) -> List[IdentityReport]:
    """Every registered identity over its default grid; reports come back in registry order."""
    ids = list(IDENTITIES)
    results: Dict[str, IdentityReport] = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        futures = {ex.submit(verify_range, iid, None, None, max_n, max_a): iid for iid in ids}
        for fut in concurrent.futures.as_completed(futures):
            iid = futures[fut]
            rep = fut.result()
            results[iid] = rep
            if config.DEBUG:
                tag = "OK" if rep.ok else "FAIL"
                print(f"[identity_suite] {tag} {iid}: pass={rep.passed} fail={rep.failed}", flush=True)
    out = [results[iid] for iid in ids]
    if include_float:
        out.extend(float_checks())
    return out
