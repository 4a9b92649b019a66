# tests/test_cumulants.py
from __future__ import annotations

import math
import unittest
from fractions import Fraction

from cumulants import (
    Dims,
    cumulant_set,
    cumulants_from_moments,
    gamma_log_moment,
    kappa1,
    kappa1_via_T,
    kappa2,
    kappa2_via_T,
    kappa3,
    kappa3_via_moments,
    kappa3_via_T,
    moments_from_cumulants,
    scaling_rows,
    skewness,
    standardized_cumulant,
    t_cumulants,
    t_moments,
)
from ensemble_sim import binary_entropy, simplex_quadrature_m2
from exact_core import G, ZERO, PolyValue, psi_int, to_float

GRID = [Dims(m, n) for n in range(1, 7) for m in range(1, n + 1)]


def _quadrature_cumulants(n: int):
    mu = simplex_quadrature_m2(n, binary_entropy)
    var = simplex_quadrature_m2(n, lambda x: (binary_entropy(x) - mu) ** 2)
    m3 = simplex_quadrature_m2(n, lambda x: (binary_entropy(x) - mu) ** 3)
    return mu, var, m3


class DimsTest(unittest.TestCase):
    def test_validation(self):
        with self.assertRaises(ValueError):
            Dims(3, 2)
        with self.assertRaises(ValueError):
            Dims(0, 2)
        with self.assertRaises(TypeError):
            Dims(2.0, 3)  # type: ignore[arg-type]
        with self.assertRaises(TypeError):
            Dims(True, 3)
        self.assertEqual(Dims(2, 5).mn, 10)


class ClosedFormTest(unittest.TestCase):
    def test_mean_two_qubits(self):
        self.assertEqual(kappa1(Dims(2, 2)), PolyValue.const(Fraction(1, 3)))

    def test_mean_is_free_of_euler_gamma(self):
        for d in GRID:
            self.assertTrue(kappa1(d).is_constant(), d)

    def test_trivial_subsystem_has_no_fluctuation(self):
        for n in range(1, 51):
            d = Dims(1, n)
            self.assertEqual(kappa1(d), ZERO)
            self.assertEqual(kappa2(d), ZERO)
            self.assertEqual(kappa3(d), ZERO)

    def test_against_simplex_quadrature(self):
        for n in (2, 3, 5):
            d = Dims(2, n)
            mu, var, m3 = _quadrature_cumulants(n)
            self.assertAlmostEqual(to_float(kappa1(d)), mu, delta=1e-10)
            self.assertAlmostEqual(to_float(kappa2(d)), var, delta=1e-10)
            self.assertAlmostEqual(to_float(kappa3(d)), m3, delta=1e-9)
            self.assertAlmostEqual(skewness(d), m3 / var ** 1.5, delta=1e-8)

    def test_variance_positive(self):
        for d in GRID:
            if d.m > 1:
                self.assertGreater(to_float(kappa2(d)), 0.0, d)

    def test_skewness_undefined_for_single_level(self):
        with self.assertRaises(ValueError):
            standardized_cumulant(Dims(1, 4))
        with self.assertRaises(ValueError):
            standardized_cumulant(Dims(2, 4), j=4)
        self.assertTrue(math.isnan(cumulant_set(Dims(1, 4)).skewness_float))

    def test_cumulant_set_bundles_closed_forms(self):
        d = Dims(3, 5)
        cs = cumulant_set(d)
        self.assertEqual(cs.kappa1, kappa1(d))
        self.assertEqual(cs.kappa3, kappa3(d))
        self.assertAlmostEqual(cs.skewness_float, skewness(d), places=14)


class ChangeOfMeasureTest(unittest.TestCase):
    def test_moment_cumulant_roundtrip_is_exact(self):
        k = (G, G * G + 1, Fraction(3, 7))
        self.assertEqual(cumulants_from_moments(*moments_from_cumulants(*k)), k)

    def test_gamma_log_moment(self):
        self.assertEqual(gamma_log_moment(1, 0), PolyValue.const(1))
        self.assertEqual(gamma_log_moment(1, 1), -G)
        self.assertEqual(gamma_log_moment(3, 2), psi_int(0, 3) ** 2 + psi_int(1, 3))
        with self.assertRaises(ValueError):
            gamma_log_moment(0, 1)
        with self.assertRaises(ValueError):
            gamma_log_moment(2, 4)

    def test_t_moments_match_t_cumulants(self):
        for d in GRID:
            et1, et2 = t_moments(d)
            tc = t_cumulants(d)
            self.assertEqual(et1, tc.kappa1T, d)
            self.assertEqual(et2 - et1 * et1, tc.kappa2T, d)

    def test_first_two_cumulants_through_T(self):
        for d in GRID:
            self.assertEqual(kappa1_via_T(d), kappa1(d), d)
            self.assertEqual(kappa2_via_T(d), kappa2(d), d)

    def test_third_cumulant_through_T(self):
        for d in GRID:
            self.assertEqual(kappa3_via_T(d), kappa3(d), d)
            self.assertEqual(kappa3_via_moments(d), kappa3(d), d)

    def test_corrupted_kappa3T_is_detected(self):
        d = Dims(3, 4)
        tc = t_cumulants(d)
        bad = type(tc)(tc.kappa1T, tc.kappa2T, tc.kappa3T + Fraction(1, 1000))
        self.assertNotEqual(kappa3_via_T(d, bad), kappa3(d))


class ScalingTest(unittest.TestCase):
    def test_rows(self):
        rows = scaling_rows(Fraction(1, 2), [4, 8, 16])
        self.assertEqual([r["m"] for r in rows], [2, 4, 8])
        for r in rows:
            d = Dims(r["m"], r["n"])
            self.assertAlmostEqual(r["kappa2"], to_float(kappa2(d)), places=15)
            self.assertAlmostEqual(r["n2_kappa2"], r["n"] ** 2 * r["kappa2"], places=12)
            self.assertAlmostEqual(r["gamma1"], skewness(d), places=12)

    def test_string_ratio_and_non_integer_m(self):
        self.assertEqual(scaling_rows("1/2", [6])[0]["m"], 3)
        with self.assertRaises(ValueError):
            scaling_rows(Fraction(1, 3), [4])

    def test_rescaled_cumulants_settle(self):
        rows = scaling_rows("1/2", [16, 32, 64])
        for col in ("n2_kappa2", "n4_kappa3", "n_gamma1"):
            vals = [r[col] for r in rows]
            for prev, cur in zip(vals, vals[1:]):
                self.assertLess(abs(cur - prev), 0.25 * abs(prev), (col, vals))
        scaled = [r["n2_kappa2"] for r in rows]
        self.assertLess(abs(scaled[2] - scaled[1]), abs(scaled[1] - scaled[0]))


if __name__ == "__main__":
    unittest.main()
