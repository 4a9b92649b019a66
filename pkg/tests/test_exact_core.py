# tests/test_exact_core.py
from __future__ import annotations

import math
import unittest
from fractions import Fraction

import numpy as np
from scipy import special

from exact_core import (
    EXACT,
    FLOAT,
    G,
    ONE,
    Z2,
    Z3,
    ZERO,
    IndeterminateError,
    LaurentSeries,
    PoleResidueError,
    PolyValue,
    falling,
    gamma_laurent,
    gamma_taylor,
    gen_binomial,
    harmonic,
    ksum,
    pochhammer,
    psi_int,
    psi_laurent,
    psi_real,
    psi_taylor,
    series_value,
    to_float,
)


class PolyValueTest(unittest.TestCase):
    def test_arithmetic_normalizes(self):
        v = (G + 1) * (G - 1)
        self.assertEqual(v, G ** 2 - 1)
        self.assertEqual(v - v, ZERO)
        self.assertTrue((v - v).is_zero())
        self.assertEqual(PolyValue({(1, 0, 0): Fraction(1, 2), (0, 0, 0): 0}), G / 2)

    def test_float_operands_rejected(self):
        with self.assertRaises(TypeError):
            G + 0.5
        with self.assertRaises(TypeError):
            PolyValue.const(1.0)  # type: ignore[arg-type]

    def test_division_only_by_constants(self):
        self.assertEqual((4 * G) / PolyValue.const(2), 2 * G)
        with self.assertRaises(TypeError):
            ONE / G
        with self.assertRaises(ZeroDivisionError):
            G / 0

    def test_canonical_and_json(self):
        v = -3 * G + Fraction(65, 12)
        self.assertEqual(v.canonical(), "-3*g + 65/12")
        self.assertEqual(ZERO.canonical(), "0")
        self.assertEqual(PolyValue.from_json(v.to_json()), v)
        self.assertEqual((Z3 - G ** 3).weight(), 3)

    def test_from_json_rejects_bad_rows(self):
        with self.assertRaises(ValueError):
            PolyValue.from_json([[1, 0, 0]])
        with self.assertRaises(ValueError):
            PolyValue.from_json([[1, 0, 0, 2]])

    def test_to_float(self):
        self.assertAlmostEqual(to_float(G), 0.5772156649015329, places=15)
        self.assertAlmostEqual(to_float(Z2), math.pi ** 2 / 6, places=15)
        self.assertEqual(to_float(Fraction(1, 4)), 0.25)

    def test_hash_matches_equality(self):
        self.assertEqual(hash(G + 1), hash(1 + G))
        self.assertEqual(len({G + 1, 1 + G, G}), 2)

    def test_ring_laws_on_random_values(self):
        rng = np.random.default_rng(114)

        def draw() -> PolyValue:
            terms = {}
            for _ in range(int(rng.integers(0, 5))):
                mono = tuple(int(e) for e in rng.integers(0, 3, size=3))
                terms[mono] = Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 13)))
            return PolyValue(terms)

        for _ in range(1000):
            a, b, c = draw(), draw(), draw()
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a - a, ZERO)
            self.assertEqual(a * ONE, a)


class PolygammaTest(unittest.TestCase):
    def test_values_at_one(self):
        self.assertEqual(psi_int(0, 1), -G)
        self.assertEqual(psi_int(1, 1), Z2)
        self.assertEqual(psi_int(2, 1), -2 * Z3)

    def test_shifted_digamma_sum(self):
        total = ksum(1, 3, lambda k: psi_int(0, k + 2))
        self.assertEqual(total, -3 * G + Fraction(65, 12))

    def test_recurrence(self):
        for l in range(1, 30):
            self.assertEqual(psi_int(0, l + 1) - psi_int(0, l), Fraction(1, l))
            self.assertEqual(psi_int(1, l + 1) - psi_int(1, l), Fraction(-1, l * l))
            self.assertEqual(psi_int(2, l + 1) - psi_int(2, l), Fraction(2, l ** 3))

    def test_harmonic(self):
        self.assertEqual(harmonic(1, 1), 0)
        self.assertEqual(harmonic(5, 1), Fraction(25, 12))
        self.assertEqual(harmonic(200, 2) - harmonic(199, 2), Fraction(1, 199 ** 2))
        with self.assertRaises(ValueError):
            harmonic(0, 1)

    def test_non_positive_argument(self):
        with self.assertRaises(IndeterminateError):
            psi_int(0, 0)
        with self.assertRaises(ValueError):
            psi_int(3, 2)
        with self.assertRaises(TypeError):
            psi_int(0, 2.0)  # type: ignore[arg-type]

    def test_float_agrees_with_exact(self):
        for j in range(3):
            for l in (1, 2, 7, 40):
                self.assertAlmostEqual(to_float(psi_int(j, l)), psi_real(j, l), delta=1e-13 * max(1.0, abs(psi_real(j, l))))

    def test_psi_real_against_scipy(self):
        for j in range(4):
            for x in (0.05, 0.5, 1.0, 3.25, 10.5, 27.0, 300.0):
                ref = float(special.polygamma(j, x))
                self.assertAlmostEqual(psi_real(j, x), ref, delta=1e-12 * max(1.0, abs(ref)))

    def test_psi_real_trigamma_at_one(self):
        self.assertAlmostEqual(psi_real(1, 1.0), math.pi ** 2 / 6, places=13)
        with self.assertRaises(ValueError):
            psi_real(0, 0.0)


class CombinatoricsTest(unittest.TestCase):
    def test_pochhammer_and_falling(self):
        self.assertEqual(pochhammer(3, 0), 1)
        self.assertEqual(pochhammer(3, 4), 3 * 4 * 5 * 6)
        self.assertEqual(pochhammer(1, 4), 24)
        for a, n in ((0, 2), (-3, 1), (2.0, 2), (Fraction(1, 2), 2), (2, -1), (2, 1.0)):
            with self.assertRaises(ValueError):
                pochhammer(a, n)
        self.assertEqual(falling(5, 3), 60)
        self.assertEqual(falling(Fraction(1, 2), 2), Fraction(-1, 4))
        self.assertEqual(gen_binomial(-1, 3), -1)
        self.assertEqual(gen_binomial(6, 2), 15)
        self.assertEqual(gen_binomial(4, -1), 0)

    def test_ksum_empty(self):
        self.assertEqual(ksum(3, 2, lambda k: 1 / 0), 0)

    def test_backends_share_shape(self):
        self.assertEqual(EXACT.frac(3, 6), Fraction(1, 2))
        self.assertEqual(EXACT.frac(2 * G, 4), G / 2)
        self.assertEqual(EXACT.fact(5), 120)
        self.assertAlmostEqual(FLOAT.fact(5), 120.0, places=9)
        self.assertAlmostEqual(FLOAT.fact(0.5), math.sqrt(math.pi) / 2, places=12)
        with self.assertRaises(IndeterminateError):
            EXACT.fact(-1)


class LaurentTest(unittest.TestCase):
    def test_gamma_at_zero(self):
        s = gamma_laurent(0, 0)
        self.assertEqual(s.coefficient(-1), ONE)
        self.assertEqual(s.coefficient(0), -G)

    def test_psi_poles_at_zero(self):
        s0 = psi_laurent(0, 0, 0)
        self.assertEqual(s0.poles(), {-1: PolyValue.const(-1)})
        self.assertEqual(s0.coefficient(0), -G)
        s1 = psi_laurent(1, 0, 0)
        self.assertEqual(s1.poles(), {-2: ONE})
        self.assertEqual(s1.coefficient(0), Z2)

    def test_gamma_numeric(self):
        eps = 1e-6
        s = gamma_laurent(2, 1)
        ref = float(special.gamma(-2 + eps))
        self.assertAlmostEqual(s.evaluate(eps) / ref, 1.0, delta=1e-4)

    def test_digamma_numeric(self):
        for l in range(6):
            eps = 1e-5
            ref = float(special.digamma(-l + eps))
            got = psi_laurent(0, l, 2).evaluate(eps)
            self.assertAlmostEqual(got / ref, 1.0, delta=1e-4)

    def test_trigamma_numeric_by_reflection(self):
        for l in range(6):
            eps = 1e-5
            x = -l + eps
            ref = math.pi ** 2 / math.sin(math.pi * x) ** 2 - float(special.polygamma(1, 1 - x))
            got = psi_laurent(1, l, 1).evaluate(eps)
            self.assertAlmostEqual(got / ref, 1.0, delta=1e-4)

    def test_truncation_error_scales_with_order(self):
        # psi_0(-l + eps) through eps^1: the error should fall ~100x when eps falls 10x
        for l in range(1, 6):
            s = psi_laurent(0, l, 1)
            errs = []
            for eps in (1e-3, 1e-4):
                ref = float(special.digamma(1 + eps)) - 1 / eps - sum(1 / (eps - i) for i in range(1, l + 1))
                errs.append(abs(s.evaluate(eps) - ref))
            ratio = errs[0] / errs[1]
            self.assertTrue(100 / 5 <= ratio <= 100 * 5, f"l={l} ratio={ratio}")

    def test_taylor_expansions(self):
        t = psi_taylor(0, 3, 2)
        self.assertEqual(t.coefficient(0), psi_int(0, 3))
        self.assertEqual(t.coefficient(1), psi_int(1, 3))
        self.assertEqual(t.coefficient(2), psi_int(2, 3) / 2)
        g = gamma_taylor(3, 1)
        self.assertEqual(g.coefficient(0), PolyValue.const(2))
        self.assertEqual(g.coefficient(1), 2 * psi_int(0, 3))
        with self.assertRaises(ValueError):
            psi_taylor(1, 2, 2)

    def test_product_truncation(self):
        a = LaurentSeries({-1: 1, 0: 2}, 1)
        b = LaurentSeries({1: 3, 2: 5}, 2)
        p = a * b
        self.assertEqual(p.order, 1)
        self.assertEqual(p.coefficient(0), PolyValue.const(3))
        self.assertEqual(p.coefficient(1), PolyValue.const(11))
        with self.assertRaises(ValueError):
            p.coefficient(2)

    def test_series_value(self):
        self.assertEqual(series_value(LaurentSeries({0: 7, 1: 1}, 1)), PolyValue.const(7))
        with self.assertRaises(PoleResidueError):
            series_value(LaurentSeries({-1: 1, 0: 2}, 0))
        cancelled = gamma_laurent(1, 0) + LaurentSeries({-1: 1}, 0)
        self.assertEqual(cancelled.poles(), {})


if __name__ == "__main__":
    unittest.main()
