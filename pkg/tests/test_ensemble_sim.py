# tests/test_ensemble_sim.py
from __future__ import annotations

import io
import math
import os
import unittest

import numpy as np
from scipy import stats as sps

from cumulants import Dims, kappa1, kappa2, kappa3, t_cumulants
from ensemble_sim import (
    BatchMoments,
    EigenConvergenceError,
    EigenSpectrum,
    SampleStats,
    binary_entropy,
    empirical_cumulants,
    entropy_from_T,
    entropy_S,
    fixed_trace_eigenvalues,
    induced_T,
    jacobi_eigenvalues,
    make_rng,
    run_batch,
    sample_ginibre,
    samples_frame,
    simplex_quadrature_m2,
    simulate,
    stats_from_values,
    wishart_eigenvalues,
    write_samples_csv,
)
from exact_core import to_float

SLOW = os.environ.get("VN_SKEW_SLOW") == "1"


def _random_hermitian(rng: np.random.Generator, count: int, m: int) -> np.ndarray:
    Z = rng.standard_normal((count, m, m)) + 1j * rng.standard_normal((count, m, m))
    return (Z + np.conj(np.swapaxes(Z, -1, -2))) / 2.0


class JacobiTest(unittest.TestCase):
    def test_two_by_two(self):
        H = np.array([[2.0, 1.0 - 1.0j], [1.0 + 1.0j, 3.0]])
        np.testing.assert_allclose(jacobi_eigenvalues(H), [4.0, 1.0], atol=1e-12)

    def test_embedded_block(self):
        H = np.zeros((4, 4), dtype=complex)
        H[:2, :2] = [[2.0, 1.0 - 1.0j], [1.0 + 1.0j, 3.0]]
        H[2, 2], H[3, 3] = 7.0, 0.5
        np.testing.assert_allclose(jacobi_eigenvalues(H), [7.0, 4.0, 1.0, 0.5], atol=1e-12)

    def test_stack_against_numpy(self):
        rng = np.random.default_rng(3)
        H = _random_hermitian(rng, 40, 5)
        H = H + 12.0 * np.eye(5)
        got = jacobi_eigenvalues(H)
        ref = np.linalg.eigvalsh(H)[:, ::-1]
        self.assertEqual(got.shape, (40, 5))
        np.testing.assert_allclose(got, ref, atol=1e-10)

    def test_input_untouched_and_errors(self):
        H = np.array([[1.0, 0.5], [0.5, 1.0]])
        before = H.copy()
        jacobi_eigenvalues(H)
        np.testing.assert_array_equal(H, before)
        with self.assertRaises(ValueError):
            jacobi_eigenvalues(np.zeros((2, 3)))
        with self.assertRaises(EigenConvergenceError):
            jacobi_eigenvalues(H, max_sweeps=0)

    def test_wishart_stacks_with_four_or_more_rows(self):
        rng = np.random.default_rng(20)
        for m, n, count in ((4, 20, 20), (4, 8, 64), (6, 6, 32), (8, 12, 20)):
            X = (rng.standard_normal((count, m, n)) + 1j * rng.standard_normal((count, m, n))) / math.sqrt(2.0)
            W = X @ np.conj(np.swapaxes(X, -1, -2))
            got = jacobi_eigenvalues(W)
            ref = np.linalg.eigvalsh(W)[:, ::-1]
            self.assertTrue(np.all(np.isfinite(got)), (m, n))
            scale = np.trace(W, axis1=1, axis2=2).real[:, None]
            np.testing.assert_allclose(got / scale, ref / scale, atol=1e-11, err_msg=f"m={m} n={n}")

    def test_converged_matrices_stay_finite_beside_slow_ones(self):
        rng = np.random.default_rng(21)
        H = _random_hermitian(rng, 10, 6) + 8.0 * np.eye(6)
        H[:5] = np.diag([6.0, 5.0, 4.0, 3.0, 2.0, 1.0])
        H[0, 0, 1] = H[0, 1, 0] = 1e-305
        got = jacobi_eigenvalues(H)
        self.assertTrue(np.all(np.isfinite(got)))
        np.testing.assert_allclose(got, np.linalg.eigvalsh(H)[:, ::-1], atol=1e-10)


class SpectrumTest(unittest.TestCase):
    def test_rng_substreams(self):
        a = make_rng(42, 3).standard_normal(5)
        b = make_rng(42, 3).standard_normal(5)
        c = make_rng(42, 4).standard_normal(5)
        np.testing.assert_array_equal(a, b)
        self.assertFalse(np.array_equal(a, c))
        with self.assertRaises(ValueError):
            make_rng(-1)

    def test_ginibre_scale(self):
        X = sample_ginibre(Dims(20, 50), make_rng(1))
        self.assertEqual(X.shape, (20, 50))
        self.assertAlmostEqual(float(np.mean(np.abs(X) ** 2)), 1.0, delta=0.1)

    def test_wishart_matches_numpy(self):
        X = sample_ginibre(Dims(3, 5), make_rng(9))
        spec = wishart_eigenvalues(X)
        ref = np.linalg.eigvalsh(X @ X.conj().T)[::-1]
        np.testing.assert_allclose(spec.values, ref, rtol=1e-10)
        lam = fixed_trace_eigenvalues(X)
        self.assertTrue(lam.normalized)
        self.assertAlmostEqual(float(np.sum(lam.values)), 1.0, places=13)
        with self.assertRaises(ValueError):
            wishart_eigenvalues(X.T)

    def test_spectrum_validation(self):
        with self.assertRaises(ValueError):
            EigenSpectrum(np.array([0.2, 0.8]), normalized=True)
        with self.assertRaises(ValueError):
            EigenSpectrum(np.array([0.9, 0.3]), normalized=True)
        with self.assertRaises(ValueError):
            EigenSpectrum(np.array([1.0, -0.5]), normalized=False)
        with self.assertRaises(ValueError):
            EigenSpectrum(np.array([]), normalized=False)
        clamped = EigenSpectrum(np.array([1.0, -1e-16]), normalized=False)
        self.assertEqual(clamped.values[1], 0.0)


class EntropyTest(unittest.TestCase):
    def test_extremes(self):
        self.assertAlmostEqual(entropy_S(EigenSpectrum(np.array([0.5, 0.5]), True)), math.log(2), places=15)
        pure = entropy_S(EigenSpectrum(np.array([1.0, 0.0]), True))
        self.assertEqual(pure, 0.0)
        self.assertEqual(math.copysign(1.0, pure), 1.0)
        self.assertAlmostEqual(binary_entropy(0.5), math.log(2), places=15)
        self.assertEqual(binary_entropy(1.0), 0.0)

    def test_change_of_measure_per_sample(self):
        X = sample_ginibre(Dims(3, 4), make_rng(5))
        theta = wishart_eigenvalues(X)
        self.assertAlmostEqual(entropy_from_T(theta), entropy_S(fixed_trace_eigenvalues(X)), places=12)
        with self.assertRaises(ValueError):
            entropy_S(theta)
        with self.assertRaises(ValueError):
            induced_T(fixed_trace_eigenvalues(X))


class MomentsTest(unittest.TestCase):
    def setUp(self):
        self.x = make_rng(11).gamma(2.0, size=1000)

    def test_combine_matches_pooled(self):
        a = BatchMoments.from_values(0, self.x[:300])
        b = BatchMoments.from_values(1, self.x[300:])
        pooled = BatchMoments.from_values(0, self.x)
        both = a.combine(b)
        self.assertEqual(both.count, 1000)
        for name in ("mean", "m2", "m3", "m4"):
            self.assertAlmostEqual(getattr(both, name), getattr(pooled, name), delta=1e-9 * abs(getattr(pooled, name)))

    def test_kstats_against_scipy(self):
        k1, k2, k3 = BatchMoments.from_values(0, self.x).kstats()
        self.assertAlmostEqual(k1, float(np.mean(self.x)), places=12)
        self.assertAlmostEqual(k2, float(sps.kstat(self.x, 2)), places=10)
        self.assertAlmostEqual(k3, float(sps.kstat(self.x, 3)), places=9)

    def test_merge(self):
        whole = stats_from_values(self.x, batches=10)
        first = SampleStats(whole.batches[:4])
        second = SampleStats(whole.batches[4:])
        merged = second.merge(first)
        self.assertEqual(merged, whole)
        with self.assertRaises(ValueError):
            first.merge(first)
        with self.assertRaises(ValueError):
            first.merge(SampleStats(whole.batches[4:], statistic="T"))

    def test_empirical_cumulants(self):
        emp = empirical_cumulants(stats_from_values(self.x, batches=10))
        self.assertEqual(emp.count, 1000)
        self.assertAlmostEqual(emp.k2, float(sps.kstat(self.x, 2)), places=9)
        self.assertGreater(emp.se1, 0.0)
        z = emp.z_scores([emp.k1, emp.k2, emp.k3])
        self.assertEqual(z, (0.0, 0.0, 0.0))
        with self.assertRaises(ValueError):
            empirical_cumulants(stats_from_values(self.x[:5], batches=1))
        tiny = empirical_cumulants(stats_from_values(self.x[:20], batches=10))
        self.assertTrue(math.isnan(tiny.se3))
        with self.assertRaises(ValueError):
            stats_from_values(self.x[:5], batches=10)


class SimulationTest(unittest.TestCase):
    def test_thread_count_does_not_change_results(self):
        d = Dims(2, 3)
        one = simulate(d, 3000, seed=7, batches=10, threads=1)
        four = simulate(d, 3000, seed=7, batches=10, threads=4)
        np.testing.assert_array_equal(one.values, four.values)
        self.assertEqual(one.stats, four.stats)
        self.assertEqual(run_batch(d, 3000, seed=7, batches=10), one.stats)

    def test_seed_changes_draws(self):
        d = Dims(2, 3)
        a = simulate(d, 500, seed=1, batches=5).values
        b = simulate(d, 500, seed=2, batches=5).values
        self.assertFalse(np.array_equal(a, b))

    def test_single_level_is_pure(self):
        res = simulate(Dims(1, 4), 200, seed=3, batches=4)
        self.assertTrue(np.all(res.values == 0.0))
        emp = empirical_cumulants(res.stats)
        self.assertEqual((emp.k1, emp.k2, emp.k3), (0.0, 0.0, 0.0))

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            simulate(Dims(2, 3), 5, batches=10)
        with self.assertRaises(ValueError):
            simulate(Dims(2, 3), 100, batches=10, statistic="Q")

    def test_cumulants_of_S(self):
        d = Dims(2, 2)
        emp = empirical_cumulants(simulate(d, 200_000, seed=42).stats)
        z = emp.z_scores([to_float(kappa1(d)), to_float(kappa2(d)), to_float(kappa3(d))])
        for zi in z:
            self.assertLess(abs(zi), 5.0, z)

    def test_mean_of_T(self):
        d = Dims(2, 3)
        emp = empirical_cumulants(simulate(d, 100_000, seed=42, statistic="T").stats)
        tc = t_cumulants(d)
        z = emp.z_scores([to_float(tc.kappa1T), to_float(tc.kappa2T), to_float(tc.kappa3T)])
        self.assertLess(abs(z[0]), 5.0, z)
        self.assertLess(abs(z[1]), 5.0, z)

    def test_entropy_stays_in_range(self):
        for m, n in ((2, 2), (3, 3), (3, 7), (4, 8), (5, 6)):
            values = simulate(Dims(m, n), 2000, seed=13, batches=10).values
            self.assertEqual(values.shape, (2000,))
            self.assertTrue(np.all(np.isfinite(values)), (m, n))
            self.assertGreaterEqual(float(values.min()), 0.0, (m, n))
            self.assertLessEqual(float(values.max()), math.log(m) + 1e-12, (m, n))

    def test_four_by_eight_reduced(self):
        d = Dims(4, 8)
        emp = empirical_cumulants(simulate(d, 20_000, seed=7, threads=4).stats)
        exact = [to_float(kappa1(d)), to_float(kappa2(d)), to_float(kappa3(d))]
        self.assertLess(exact[2], 0.0)
        self.assertLess(emp.k3, 0.0)
        z = emp.z_scores(exact)
        for zi in z:
            self.assertLess(abs(zi), 5.0, z)

    @unittest.skipUnless(SLOW, "set VN_SKEW_SLOW=1 for the 10^6-sample run")
    def test_acceptance_4_by_8(self):
        d = Dims(4, 8)
        emp = empirical_cumulants(simulate(d, 1_000_000, seed=42, threads=4).stats)
        z = emp.z_scores([to_float(kappa1(d)), to_float(kappa2(d)), to_float(kappa3(d))])
        for zi in z:
            self.assertLess(abs(zi), 4.0, z)
        self.assertLess(emp.k3, 0.0)


class ExportTest(unittest.TestCase):
    def test_csv(self):
        frame = samples_frame([0.5, 0.25])
        self.assertEqual(list(frame.columns), ["sample_index", "S"])
        buf = io.StringIO()
        write_samples_csv([0.5, 1.0 / 3.0], buf)
        self.assertEqual(buf.getvalue().splitlines(), ["sample_index,S", "0,0.5", "1,0.333333333333"])


class OracleTest(unittest.TestCase):
    def test_normalization_and_mean(self):
        self.assertAlmostEqual(simplex_quadrature_m2(4, lambda x: 1.0), 1.0, places=12)
        self.assertAlmostEqual(simplex_quadrature_m2(2, binary_entropy), 1.0 / 3.0, delta=1e-10)
        with self.assertRaises(ValueError):
            simplex_quadrature_m2(1, binary_entropy)


if __name__ == "__main__":
    unittest.main()
