# exact_core.py
"""
Exact values of polygamma functions at integer arguments.

Every psi_j(l) with l >= 1 and j <= 2 is a polynomial in the formal symbols
g (Euler's constant), z2 (zeta(2)) and z3 (zeta(3)) with rational coefficients.
PolyValue holds such polynomials; LaurentSeries holds truncated series in a
formal epsilon whose coefficients are PolyValues, which is how gamma and
polygamma terms at non-positive integers get resolved.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

from scipy.special import gammaln

Monomial = Tuple[int, int, int]
Scalar = Union[int, Fraction]

EULER_GAMMA = 0.57721566490153286061
ZETA2 = math.pi ** 2 / 6.0
ZETA3 = 1.20205690315959428540

SYMBOLS = ("g", "z2", "z3")
SYMBOL_WEIGHTS = (1, 2, 3)
SYMBOL_FLOATS = (EULER_GAMMA, ZETA2, ZETA3)

# lowest power of epsilon a LaurentSeries may carry
LAURENT_FLOOR = -3


class IndeterminateError(ArithmeticError):
    """A polygamma or gamma argument was a non-positive integer."""


class PoleResidueError(ArithmeticError):
    """A summed Laurent series kept a nonzero coefficient of a negative power."""


def _as_fraction(x: Any, where: str) -> Fraction:
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"[exact_core] {where}: exact operand required, got {type(x).__name__}")


# -------------------------
# PolyValue
# -------------------------

class PolyValue:
    """Rational polynomial in g, z2, z3. Immutable; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[Monomial, Scalar]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != 3 or any((not isinstance(e, int)) or e < 0 for e in mono):
                raise ValueError(f"[exact_core] PolyValue: bad monomial {mono!r}")
            fc = _as_fraction(c, "PolyValue")
            if fc:
                key = (int(mono[0]), int(mono[1]), int(mono[2]))
                clean[key] = clean.get(key, Fraction(0)) + fc
                if not clean[key]:
                    del clean[key]
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "PolyValue":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "PolyValue":
        fc = _as_fraction(c, "PolyValue.const")
        return cls._raw({(0, 0, 0): fc} if fc else {})

    @classmethod
    def symbol(cls, name: str) -> "PolyValue":
        if name not in SYMBOLS:
            raise ValueError(f"[exact_core] unknown symbol {name!r}; expected one of {SYMBOLS}")
        mono = tuple(1 if s == name else 0 for s in SYMBOLS)
        return cls._raw({mono: Fraction(1)})  # type: ignore[dict-item]

    # ---- inspection ----

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))  # type: ignore[arg-type]

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == (0, 0, 0) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0), Fraction(0))

    def weight(self) -> int:
        """Largest total weight over the stored monomials (g=1, z2=2, z3=3); 0 for zero."""
        return max((_mono_weight(m) for m in self._terms), default=0)

    # ---- arithmetic ----

    @staticmethod
    def _coerce(other: Any) -> Optional["PolyValue"]:
        if isinstance(other, PolyValue):
            return other
        if isinstance(other, float):
            raise TypeError("[exact_core] PolyValue: float operands are not allowed (use to_float on the result)")
        if isinstance(other, (int, Fraction)):
            return PolyValue.const(other)
        return None

    def __add__(self, other: Any) -> "PolyValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in o._terms.items():
            v = out.get(mono, Fraction(0)) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return PolyValue._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyValue":
        return PolyValue._raw({mono: -c for mono, c in self._terms.items()})

    def __pos__(self) -> "PolyValue":
        return self

    def __sub__(self, other: Any) -> "PolyValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "PolyValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "PolyValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return PolyValue._raw({})
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return PolyValue._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "PolyValue":
        if isinstance(other, PolyValue):
            if not other.is_constant():
                raise TypeError("[exact_core] PolyValue: division only by rational constants")
            other = other.constant_term()
        d = _as_fraction(other, "PolyValue division")
        if not d:
            raise ZeroDivisionError("[exact_core] PolyValue division by zero")
        return PolyValue._raw({mono: c / d for mono, c in self._terms.items()})

    def __pow__(self, k: int) -> "PolyValue":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"[exact_core] PolyValue power must be a non-negative int, got {k!r}")
        out = PolyValue.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, float):
            return False
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __ne__(self, other: Any) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ---- output ----

    def to_float(self) -> float:
        total = 0.0
        for mono, c in self._terms.items():
            v = float(c)
            for e, x in zip(mono, SYMBOL_FLOATS):
                if e:
                    v *= x ** e
            total += v
        return total

    def __float__(self) -> float:
        return self.to_float()

    def canonical(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for mono in sorted(self._terms, key=lambda m: (_mono_weight(m), m), reverse=True):
            c = self._terms[mono]
            sym = "*".join(
                (name if e == 1 else f"{name}^{e}") for name, e in zip(SYMBOLS, mono) if e
            )
            mag = abs(c)
            if not sym:
                body = _fmt_fraction(mag)
            elif mag == 1:
                body = sym
            else:
                body = f"{_fmt_fraction(mag)}*{sym}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.canonical()

    def __repr__(self) -> str:
        return f"PolyValue({self.canonical()!r})"

    def to_json(self) -> List[List[Any]]:
        rows = []
        for mono in sorted(self._terms, key=lambda m: (_mono_weight(m), m), reverse=True):
            rows.append([mono[0], mono[1], mono[2], _fmt_fraction(self._terms[mono])])
        return rows

    @classmethod
    def from_json(cls, rows: Iterable[Any]) -> "PolyValue":
        terms: Dict[Monomial, Fraction] = {}
        for i, r in enumerate(rows):
            if not isinstance(r, (list, tuple)) or len(r) != 4:
                raise ValueError(f"[exact_core] from_json: row {i} must be [g, z2, z3, 'p/q'], got {r!r}")
            g, z2, z3, c = r
            if not all(isinstance(e, int) for e in (g, z2, z3)) or not isinstance(c, str):
                raise ValueError(f"[exact_core] from_json: row {i} has wrong field types: {r!r}")
            mono = (g, z2, z3)
            terms[mono] = terms.get(mono, Fraction(0)) + Fraction(c)
        return cls(terms)


def _mono_weight(mono: Monomial) -> int:
    return sum(e * w for e, w in zip(mono, SYMBOL_WEIGHTS))


def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


ZERO = PolyValue()
ONE = PolyValue.const(1)
G = PolyValue.symbol("g")
Z2 = PolyValue.symbol("z2")
Z3 = PolyValue.symbol("z3")


def to_float(v: Union[PolyValue, Scalar]) -> float:
    if isinstance(v, PolyValue):
        return v.to_float()
    return float(_as_fraction(v, "to_float"))


# -------------------------
# Integer-argument polygamma
# -------------------------

def harmonic(l: int, p: int) -> Fraction:
    """Sum of 1/k^p for k = 1..l-1."""
    if not isinstance(l, int) or not isinstance(p, int):
        raise TypeError(f"[exact_core] harmonic: integer arguments required, got ({l!r}, {p!r})")
    if l < 1 or p < 1:
        raise ValueError(f"[exact_core] harmonic: need l >= 1 and p >= 1, got ({l}, {p})")
    return _harmonic(l, p)


@lru_cache(maxsize=None)
def _harmonic(l: int, p: int) -> Fraction:
    if l == 1:
        return Fraction(0)
    # iterate from the nearest cached value instead of recursing deeply
    start = max(1, l - 64)
    acc = _harmonic(start, p) if start < l else Fraction(0)
    for k in range(start, l):
        acc += Fraction(1, k ** p)
    return acc


def psi_int(j: int, l: int) -> PolyValue:
    if j not in (0, 1, 2):
        raise ValueError(f"[exact_core] psi_int: order must be 0, 1 or 2, got {j!r}")
    if not isinstance(l, numbers.Integral) or isinstance(l, bool):
        raise TypeError(f"[exact_core] psi_int: l must be int, got {type(l).__name__}")
    l = int(l)
    if l < 1:
        raise IndeterminateError(f"[exact_core] psi_int: l must be >= 1, got {l} (use psi_laurent)")
    return _psi_int(j, l)


@lru_cache(maxsize=None)
def _psi_int(j: int, l: int) -> PolyValue:
    if j == 0:
        return PolyValue._raw({(1, 0, 0): Fraction(-1)}) + harmonic(l, 1)
    if j == 1:
        return PolyValue._raw({(0, 1, 0): Fraction(1)}) - harmonic(l, 2)
    return PolyValue._raw({(0, 0, 1): Fraction(-2)}) + 2 * harmonic(l, 3)


def pochhammer(a: int, n: int) -> int:
    """(a)_n = a(a+1)...(a+n-1); 1 for n = 0."""
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"[exact_core] pochhammer: a must be an int >= 1, got {a!r}")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"[exact_core] pochhammer: n must be an int >= 0, got {n!r}")
    out = 1
    for i in range(n):
        out *= a + i
    return out


def falling(x: Scalar, r: int) -> Fraction:
    """x(x-1)...(x-r+1); 1 for r = 0."""
    out = Fraction(1)
    for i in range(r):
        out *= x - i
    return out


def gen_binomial(x: int, k: int) -> Fraction:
    """Binomial coefficient C(x, k) for any integer x via the falling factorial."""
    if k < 0:
        return Fraction(0)
    return falling(x, k) / math.factorial(k)


# -------------------------
# Real-argument polygamma
# -------------------------

# B_2 .. B_14
_BERNOULLI = (
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
)
_ASYMPTOTIC_FROM = 12.0


def psi_real(j: int, x: float) -> float:
    """
    psi_j(x) for real x > 0: shift upward with psi_j(x) = psi_j(x+1) + (-1)^(j+1) j!/x^(j+1)
    until x >= 12 (+ j), then use the Bernoulli asymptotic series.
    """
    if not isinstance(j, int) or j < 0:
        raise ValueError(f"[exact_core] psi_real: order must be a non-negative int, got {j!r}")
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"[exact_core] psi_real: x must be > 0, got {x}")

    sign = -1.0 if j % 2 == 0 else 1.0  # (-1)^(j+1)
    jfact = float(math.factorial(j))
    acc = 0.0
    threshold = _ASYMPTOTIC_FROM + j
    while x < threshold:
        acc += sign * jfact / x ** (j + 1)
        x += 1.0

    if j == 0:
        tail = math.log(x) - 0.5 / x
        for k, b in enumerate(_BERNOULLI, start=1):
            tail -= float(b) / (2 * k * x ** (2 * k))
        return acc + tail

    tail = math.factorial(j - 1) / x ** j + jfact / (2.0 * x ** (j + 1))
    for k, b in enumerate(_BERNOULLI, start=1):
        tail += float(b) * math.factorial(2 * k + j - 1) / (math.factorial(2 * k) * x ** (2 * k + j))
    return acc + sign * tail


# -------------------------
# LaurentSeries
# -------------------------

class LaurentSeries:
    """
    Truncated Laurent series sum_p c_p eps^p, p from LAURENT_FLOOR up to `order`,
    with PolyValue coefficients. Coefficients above `order` are unknown.
    """

    __slots__ = ("_coeffs", "order")

    def __init__(self, coeffs: Dict[int, Any], order: int):
        clean: Dict[int, PolyValue] = {}
        for p, c in coeffs.items():
            if p > order:
                continue
            v = c if isinstance(c, PolyValue) else PolyValue.const(c)
            if not v:
                continue
            if p < LAURENT_FLOOR:
                raise ValueError(f"[exact_core] LaurentSeries: power {p} below floor {LAURENT_FLOOR}")
            clean[p] = v
        if order < LAURENT_FLOOR:
            raise ValueError(f"[exact_core] LaurentSeries: order {order} below floor {LAURENT_FLOOR}")
        self._coeffs = clean
        self.order = order

    @classmethod
    def _raw(cls, coeffs: Dict[int, PolyValue], order: int) -> "LaurentSeries":
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        obj.order = order
        return obj

    @classmethod
    def constant(cls, c: Any, order: int) -> "LaurentSeries":
        return cls({0: c}, order)

    @classmethod
    def linear(cls, c0: Any, c1: Any, order: int) -> "LaurentSeries":
        """c0 + c1*eps, exact up to `order`."""
        return cls({0: c0, 1: c1}, order)

    def coefficient(self, p: int) -> PolyValue:
        if p > self.order:
            raise ValueError(f"[exact_core] LaurentSeries: eps^{p} is beyond truncation order {self.order}")
        return self._coeffs.get(p, ZERO)

    @property
    def coeffs(self) -> Dict[int, PolyValue]:
        return dict(self._coeffs)

    def low(self) -> int:
        """Lowest power with a nonzero coefficient; order + 1 for the zero series."""
        return min(self._coeffs, default=self.order + 1)

    def poles(self) -> Dict[int, PolyValue]:
        return {p: c for p, c in sorted(self._coeffs.items()) if p < 0}

    def truncate(self, order: int) -> "LaurentSeries":
        if order > self.order:
            raise ValueError(f"[exact_core] LaurentSeries: cannot extend order {self.order} to {order}")
        return LaurentSeries._raw({p: c for p, c in self._coeffs.items() if p <= order}, order)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by eps^k."""
        out = {p + k: c for p, c in self._coeffs.items()}
        if any(p < LAURENT_FLOOR for p in out):
            raise ValueError(f"[exact_core] LaurentSeries: shift by {k} drops below floor {LAURENT_FLOOR}")
        return LaurentSeries._raw(out, self.order + k)

    def _coerce(self, other: Any) -> Optional["LaurentSeries"]:
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (PolyValue, int, Fraction)) and not isinstance(other, bool):
            # an exact scalar is known to every order
            return LaurentSeries.constant(other, max(self.order, 0) + 64)
        if isinstance(other, float):
            raise TypeError("[exact_core] LaurentSeries: float operands are not allowed")
        return None

    def __add__(self, other: Any) -> "LaurentSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        order = min(self.order, o.order)
        out: Dict[int, PolyValue] = {p: c for p, c in self._coeffs.items() if p <= order}
        for p, c in o._coeffs.items():
            if p > order:
                continue
            v = out.get(p, ZERO) + c
            if v:
                out[p] = v
            else:
                out.pop(p, None)
        return LaurentSeries._raw(out, order)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries._raw({p: -c for p, c in self._coeffs.items()}, self.order)

    def __sub__(self, other: Any) -> "LaurentSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "LaurentSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "LaurentSeries":
        if isinstance(other, (PolyValue, int, Fraction)) and not isinstance(other, bool):
            if not other:
                return LaurentSeries._raw({}, self.order)
            return LaurentSeries._raw(
                {p: v for p, c in self._coeffs.items() if (v := c * other)}, self.order
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        order = min(self.order + o.low(), o.order + self.low())
        out: Dict[int, PolyValue] = {}
        for p1, c1 in self._coeffs.items():
            for p2, c2 in o._coeffs.items():
                p = p1 + p2
                if p > order:
                    continue
                if p < LAURENT_FLOOR:
                    raise ValueError(f"[exact_core] LaurentSeries: product reaches eps^{p} below floor")
                out[p] = out.get(p, ZERO) + c1 * c2
        return LaurentSeries._raw({p: c for p, c in out.items() if c}, order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentSeries":
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"[exact_core] LaurentSeries power must be a positive int, got {k!r}")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def evaluate(self, eps: float) -> float:
        return sum(c.to_float() * eps ** p for p, c in self._coeffs.items())

    def __repr__(self) -> str:
        body = ", ".join(f"eps^{p}: {c}" for p, c in sorted(self._coeffs.items()))
        return f"LaurentSeries({{{body}}}, order={self.order})"


# -------------------------
# Expansions around integers
# -------------------------

def psi_taylor(j: int, p: int, order: int) -> LaurentSeries:
    """psi_j(p + eps) for a positive integer p, through eps^order (needs j + order <= 2)."""
    if j not in (0, 1, 2) or order < 0 or j + order > 2:
        raise ValueError(f"[exact_core] psi_taylor: need j in 0..2 and j + order <= 2, got j={j}, order={order}")
    return LaurentSeries._raw(
        {r: c for r in range(order + 1) if (c := psi_int(j + r, p) / math.factorial(r))},
        order,
    )


def _inverse_power_series(i: int, power: int, order: int) -> LaurentSeries:
    # (eps - i)^(-power) = (-1)^power * sum_r C(power+r-1, r) eps^r / i^(power+r)
    sign = -1 if power % 2 else 1
    return LaurentSeries._raw(
        {r: PolyValue.const(Fraction(sign * math.comb(power + r - 1, r), i ** (power + r)))
         for r in range(order + 1)},
        order,
    )


def psi_laurent(j: int, l: int, truncation: int) -> LaurentSeries:
    """
    psi_j(-l + eps) for l >= 0:
        sum_r psi_{j+r}(1) eps^r / r!  +  (-1)^(j+1) j! [eps^-(j+1) + sum_{i=1..l} (eps - i)^-(j+1)]
    """
    if j not in (0, 1, 2):
        raise ValueError(f"[exact_core] psi_laurent: order must be 0, 1 or 2, got {j!r}")
    if l < 0:
        raise ValueError(f"[exact_core] psi_laurent: l must be >= 0, got {l}")
    if truncation < 0 or j + truncation > 2:
        raise ValueError(
            f"[exact_core] psi_laurent: truncation must satisfy 0 <= truncation <= {2 - j}, got {truncation}"
        )
    out = psi_taylor(j, 1, truncation)
    sign = math.factorial(j) * (-1 if j % 2 == 0 else 1)
    pole = LaurentSeries._raw({-(j + 1): PolyValue.const(sign)}, truncation)
    out = out + pole
    for i in range(1, l + 1):
        out = out + _inverse_power_series(i, j + 1, truncation) * sign
    return out


def gamma_taylor(p: int, order: int) -> LaurentSeries:
    """Gamma(p + eps) for a positive integer p, through eps^order (order <= 3)."""
    if p < 1:
        raise IndeterminateError(f"[exact_core] gamma_taylor: p must be >= 1, got {p} (use gamma_laurent)")
    if not 0 <= order <= 3:
        raise ValueError(f"[exact_core] gamma_taylor: order must be in 0..3, got {order}")
    moments = [gamma_log_ratio(p, r) for r in range(order + 1)]
    gp = math.factorial(p - 1)
    return LaurentSeries._raw(
        {r: c for r in range(order + 1) if (c := moments[r] * Fraction(gp, math.factorial(r)))},
        order,
    )


def gamma_log_ratio(a: int, k: int) -> PolyValue:
    """Gamma^(k)(a)/Gamma(a): 1, psi0, psi0^2+psi1, psi0^3+3psi0psi1+psi2 at a."""
    if k == 0:
        return ONE
    p0 = psi_int(0, a)
    if k == 1:
        return p0
    p1 = psi_int(1, a)
    if k == 2:
        return p0 * p0 + p1
    if k == 3:
        return p0 ** 3 + 3 * p0 * p1 + psi_int(2, a)
    raise ValueError(f"[exact_core] gamma_log_ratio: log power must be in 0..3, got {k}")


def gamma_laurent(l: int, truncation: int) -> LaurentSeries:
    """Gamma(-l + eps) = Gamma(1 + eps) / [eps (eps-1) ... (eps-l)]."""
    if l < 0:
        raise ValueError(f"[exact_core] gamma_laurent: l must be >= 0, got {l}")
    if not -1 <= truncation <= 2:
        raise ValueError(f"[exact_core] gamma_laurent: truncation must be in -1..2, got {truncation}")
    inner = truncation + 1
    out = gamma_taylor(1, inner)
    for i in range(1, l + 1):
        out = out * _inverse_power_series(i, 1, inner)
    return out.shift(-1)


def series_value(s: LaurentSeries) -> PolyValue:
    """eps^0 coefficient of a series whose pole part must vanish."""
    poles = s.poles()
    if poles:
        detail = ", ".join(f"eps^{p}: {c}" for p, c in poles.items())
        raise PoleResidueError(f"[exact_core] nonzero pole coefficients survive: {detail}")
    return s.coefficient(0)


# -------------------------
# Evaluation backends
# -------------------------

def ksum(lo: int, hi: int, term: Callable[[int], Any]) -> Any:
    """sum(term(k) for k in lo..hi); empty ranges give 0."""
    total: Any = 0
    for k in range(lo, hi + 1):
        total = total + term(k)
    return total


class ExactBackend:
    """Closed forms evaluated in PolyValue / Fraction arithmetic."""

    name = "exact"

    @staticmethod
    def psi0(x: int) -> PolyValue:
        return psi_int(0, x)

    @staticmethod
    def psi1(x: int) -> PolyValue:
        return psi_int(1, x)

    @staticmethod
    def psi2(x: int) -> PolyValue:
        return psi_int(2, x)

    @staticmethod
    def frac(p: Any, q: Any) -> Any:
        if isinstance(p, PolyValue):
            return p / q
        return Fraction(p) / Fraction(q)

    @staticmethod
    def fact(x: int) -> int:
        if x < 0:
            raise IndeterminateError(f"[exact_core] factorial of negative integer {x}")
        return math.factorial(x)


class FloatBackend:
    """The same closed forms in double precision; arguments may be real."""

    name = "float"

    @staticmethod
    def psi0(x: float) -> float:
        return psi_real(0, x)

    @staticmethod
    def psi1(x: float) -> float:
        return psi_real(1, x)

    @staticmethod
    def psi2(x: float) -> float:
        return psi_real(2, x)

    @staticmethod
    def frac(p: Any, q: Any) -> float:
        return float(p) / float(q)

    @staticmethod
    def fact(x: float) -> float:
        return math.exp(float(gammaln(float(x) + 1.0)))


EXACT = ExactBackend()
FLOAT = FloatBackend()
