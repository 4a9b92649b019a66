# tests/test_laguerre_integrals.py
from __future__ import annotations

import math
import os
import unittest
from fractions import Fraction

import numpy as np
from scipy import special

import config
from cumulants import Dims, t_cumulants, t_moments
from exact_core import FLOAT, IndeterminateError, to_float
from laguerre_integrals import (
    LogIntegralParams,
    QuadratureError,
    basis_sums,
    block_params,
    block_value,
    closed_IA,
    coefficients,
    g1_density,
    g2_density,
    gauss_laguerre,
    gauss_laguerre_2d,
    integral_IA,
    integral_IA_by_quadrature,
    integral_IB,
    integral_IB_by_quadrature,
    integral_triple,
    iter_blocks,
    kappa3T_from_integrals,
    kernel,
    laguerre,
    laguerre_rational,
    limit_schrodinger_log,
    npoint_density,
    residual_coefficients,
    schrodinger,
    schrodinger_by_quadrature,
    schrodinger_log,
    schrodinger_log_taylor,
    t_moments_by_quadrature,
    verify_integral_routes,
    verify_kappa3_chain,
    verify_pole_cancellation,
)

SLOW = os.environ.get("VN_SKEW_SLOW") == "1"


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


class LaguerreTest(unittest.TestCase):
    def test_against_scipy(self):
        x = np.linspace(0.0, 30.0, 61)
        for k in range(8):
            for alpha in (0, 1, 3.5):
                ref = special.eval_genlaguerre(k, alpha, x)
                np.testing.assert_allclose(laguerre(k, alpha, x), ref, rtol=1e-10, atol=1e-10)

    def test_rational(self):
        self.assertEqual(laguerre_rational(2, 1, 1), Fraction(1, 2))
        self.assertEqual(laguerre_rational(0, 4, 7), 1)
        self.assertAlmostEqual(float(laguerre_rational(5, 2, Fraction(3, 2))), laguerre(5, 2, 1.5), places=12)
        with self.assertRaises(ValueError):
            laguerre_rational(-1, 0, 1)


class KernelTest(unittest.TestCase):
    def test_trace_is_m(self):
        for m, n in ((1, 1), (2, 3), (3, 5), (4, 4)):
            d = Dims(m, n)
            total = gauss_laguerre(lambda x: kernel(d, x, x))
            self.assertAlmostEqual(total, m, delta=1e-8 * m)

    def test_reproducing_property(self):
        for d in (Dims(2, 3), Dims(3, 4)):
            for x, z in ((0.3, 0.3), (0.5, 2.0), (1.7, 6.0), (4.0, 0.9)):
                got = gauss_laguerre(lambda y: kernel(d, x, y) * kernel(d, y, z))
                self.assertAlmostEqual(got, kernel(d, x, z), delta=1e-7 * max(1.0, abs(kernel(d, x, z))))

    def test_christoffel_darboux_form(self):
        d = Dims(3, 6)
        x = np.array([0.1, 0.7, 2.0, 5.5, 12.0])
        np.testing.assert_allclose(g1_density(d, x), kernel(d, x, x) / 3, rtol=1e-10)
        with self.assertRaises(ValueError):
            g1_density(Dims(1, 3), x)

    def test_two_point_density(self):
        d = Dims(2, 3)
        self.assertAlmostEqual(gauss_laguerre_2d(lambda x, y: g2_density(d, x, y)), 1.0, delta=1e-6)
        pts = [0.4, 2.5]
        self.assertAlmostEqual(npoint_density(d, pts), float(g2_density(d, *pts)), places=12)
        self.assertAlmostEqual(npoint_density(d, pts[:1]), float(kernel(d, 0.4, 0.4)) / 2, places=12)

    def test_npoint_bounds(self):
        with self.assertRaises(ValueError):
            npoint_density(Dims(2, 3), [0.1, 0.2, 0.3])
        with self.assertRaises(ValueError):
            npoint_density(Dims(3, 3), [0.0])
        with self.assertRaises(ValueError):
            kernel(Dims(2, 3), -1.0, 1.0)


class SchrodingerTest(unittest.TestCase):
    def test_orthogonality(self):
        self.assertEqual(schrodinger(LogIntegralParams(2, 2, 2, 1, 3)), 0)
        self.assertEqual(schrodinger(LogIntegralParams(2, 2, 2, 3, 3)), 20)

    def test_params_validation(self):
        with self.assertRaises(ValueError):
            LogIntegralParams(-1, 0, 0, 1, 1)
        with self.assertRaises(ValueError):
            LogIntegralParams(1, 0, 0, 1, 1, 4)
        with self.assertRaises(TypeError):
            LogIntegralParams(1.0, 0, 0, 1, 1)  # type: ignore[arg-type]
        with self.assertRaises(ValueError):
            schrodinger(LogIntegralParams(1, 0, 0, 1, 1, 1))

    def test_three_routes_agree_away_from_poles(self):
        for power in (1, 2, 3):
            p = LogIntegralParams(4, 1, 1, 2, 1, power)
            direct = schrodinger_log(p)
            self.assertEqual(limit_schrodinger_log(p), direct)
            self.assertEqual(schrodinger_log_taylor(p), direct)
            self.assertLess(_rel(schrodinger_by_quadrature(p), to_float(direct)), 1e-7)

    def test_poles_need_the_limit(self):
        p = LogIntegralParams(1, 1, 1, 3, 3, 1)
        with self.assertRaises(IndeterminateError):
            schrodinger_log(p)
        limit = limit_schrodinger_log(p)
        self.assertEqual(limit, schrodinger_log_taylor(p))
        self.assertLess(_rel(schrodinger_by_quadrature(p), to_float(limit)), 1e-7)

    def test_log_power_zero_is_plain(self):
        p = LogIntegralParams(3, 1, 2, 2, 2)
        self.assertEqual(limit_schrodinger_log(p), schrodinger(p))
        self.assertLess(_rel(schrodinger_by_quadrature(p), float(schrodinger(p))), 1e-8)


class BlockTest(unittest.TestCase):
    def test_blocks_match_limits(self):
        for d in (Dims(1, 1), Dims(2, 2), Dims(3, 5), Dims(4, 4), Dims(4, 6)):
            for which, idx in iter_blocks(d):
                p = block_params(d, which, *idx)
                self.assertEqual(limit_schrodinger_log(p), block_value(d, which, idx), (d, which, idx))

    def test_block_index_checks(self):
        d = Dims(3, 5)
        with self.assertRaises(ValueError):
            block_value(d, "IBS9", (0,))
        with self.assertRaises(ValueError):
            block_value(d, "IBS4", (0, 0))
        with self.assertRaises(ValueError):
            block_value(d, "IBS6", (1,))
        with self.assertRaises(ValueError):
            block_params(Dims(1, 3), "IAS2")

    def test_block_float_backend(self):
        d = Dims(3, 5)
        for which, idx in iter_blocks(d):
            exact = to_float(block_value(d, which, idx))
            self.assertLess(_rel(block_value(d, which, idx, ev=FLOAT), exact), 1e-9, (which, idx))


class AssemblyTest(unittest.TestCase):
    def test_triple_gives_kappa3T(self):
        for m, n in ((1, 1), (1, 4), (2, 2), (2, 5), (3, 3), (3, 6), (5, 7)):
            d = Dims(m, n)
            self.assertEqual(kappa3T_from_integrals(d), t_cumulants(d).kappa3T, d)

    def test_closed_forms_match_assemblies(self):
        for m, n in ((2, 3), (2, 6), (3, 5), (4, 7)):
            d = Dims(m, n)
            tri = integral_triple(d)
            self.assertEqual(closed_IA(d), tri.IA, d)
            self.assertFalse(any(residual_coefficients(d).values()), d)

    def test_closed_forms_reject_square(self):
        with self.assertRaises(ValueError):
            closed_IA(Dims(3, 3))
        with self.assertRaises(ValueError):
            coefficients(Dims(4, 4))

    def test_basis_sums(self):
        sums = basis_sums(Dims(3, 5))
        self.assertEqual(sorted(sums), ["ub0", "ub1", "ub2", "ub3"])

    def test_against_quadrature(self):
        for m, n in ((2, 2), (2, 4), (3, 5)):
            d = Dims(m, n)
            self.assertLess(_rel(integral_IA_by_quadrature(d), to_float(integral_IA(d))), 1e-7, d)
            self.assertLess(_rel(integral_IB_by_quadrature(d), to_float(integral_IB(d))), 1e-5, d)

    def test_t_moments_against_quadrature(self):
        d = Dims(2, 3)
        et1, et2 = t_moments_by_quadrature(d)
        ref1, ref2 = t_moments(d)
        self.assertLess(_rel(et1, to_float(ref1)), 1e-7)
        self.assertLess(_rel(et2, to_float(ref2)), 1e-5)


class QuadratureTest(unittest.TestCase):
    def test_known_integrals(self):
        self.assertAlmostEqual(gauss_laguerre(lambda x: np.exp(-x)), 1.0, places=12)
        ref = 2.0 * (1.5 - 0.5772156649015329)
        self.assertAlmostEqual(gauss_laguerre(lambda x: x * x * np.exp(-x) * np.log(x)), ref, places=10)
        self.assertAlmostEqual(
            gauss_laguerre(lambda x: np.exp(-x) * np.log(x) ** 2), math.pi ** 2 / 6 + 0.5772156649015329 ** 2, places=9
        )

    def test_node_budget(self):
        with self.assertRaises(QuadratureError):
            gauss_laguerre(lambda x: np.exp(-x), nodes=8, max_nodes=8)
        with self.assertRaises(ValueError):
            gauss_laguerre(lambda x: np.exp(-x), nodes=0)


class SuiteTest(unittest.TestCase):
    def test_reduced_suites_pass(self):
        for reports in (
            verify_integral_routes(max_n=6),
            verify_kappa3_chain(max_n=6),
            verify_pole_cancellation(max_n=5),
        ):
            for r in reports:
                self.assertTrue(r.ok, r.to_json())
                self.assertGreater(r.passed, 0, r.identity_id)

    @unittest.skipUnless(SLOW, "set VN_SKEW_SLOW=1 for the full grids")
    def test_full_grids(self):
        for reports in (
            verify_integral_routes(config.INTEGRALS_MAX_DIM),
            verify_kappa3_chain(config.KAPPA3_MAX_DIM),
            verify_pole_cancellation(config.POLES_MAX_DIM),
        ):
            self.assertTrue(all(r.ok for r in reports), [r.to_json() for r in reports if not r.ok])


if __name__ == "__main__":
    unittest.main()
