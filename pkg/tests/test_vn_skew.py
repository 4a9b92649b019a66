# tests/test_vn_skew.py
from __future__ import annotations

import contextlib
import io
import json
import os
import tempfile
import unittest
from unittest import mock

import config
import vn_skew
from exact_core import PoleResidueError
from identity_suite import IdentityReport


def run(*argv: str):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = vn_skew.main(list(argv))
    return code, out.getvalue(), err.getvalue()


class CumulantsCommandTest(unittest.TestCase):
    def test_json_record(self):
        code, out, _ = run("cumulants", "--m", "2", "--n", "2", "--format", "json")
        self.assertEqual(code, config.EXIT_OK)
        doc = json.loads(out)
        self.assertEqual(doc["kappa1"]["exact"], "1/3")
        self.assertAlmostEqual(doc["kappa1"]["float"], 1.0 / 3.0, places=15)
        self.assertEqual(doc["kappa1"]["terms"], [[0, 0, 0, "1/3"]])
        self.assertIsInstance(doc["skewness"], float)

    def test_csv_table(self):
        code, out, _ = run("cumulants", "--m", "3", "--n", "5")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "quantity,exact,float")
        self.assertEqual([l.split(",")[0] for l in lines[1:]], ["kappa1", "kappa2", "kappa3", "skewness"])

    def test_single_level_omits_skewness(self):
        code, out, err = run("cumulants", "--m", "1", "--n", "4", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertIsNone(doc["skewness"])
        self.assertEqual(doc["kappa3"]["exact"], "0")
        self.assertIn("WARN", err)

    def test_bad_dimensions(self):
        self.assertEqual(run("cumulants", "--m", "3", "--n", "2")[0], config.EXIT_BAD_ARGS)
        self.assertEqual(run("cumulants", "--m", "3")[0], config.EXIT_BAD_ARGS)
        self.assertEqual(run("cumulants", "--m", "2", "--n", "2", "--threads", "0")[0], config.EXIT_BAD_ARGS)

    def test_numeric_failure_exit_code(self):
        with mock.patch.object(vn_skew, "cumulant_set", side_effect=PoleResidueError("pole")):
            code, _, err = run("cumulants", "--m", "2", "--n", "3")
        self.assertEqual(code, config.EXIT_NUMERIC)
        self.assertIn("FAIL", err)


class VerifyCommandTest(unittest.TestCase):
    def test_identities_scope(self):
        code, out, err = run("verify", "identities", "--max-n", "4", "--threads", "2")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual((doc["command"], doc["scope"], doc["ok"]), ("verify", "identities", True))
        ids = [r["identity_id"] for r in doc["reports"]]
        self.assertIn("A2", ids)
        self.assertIn("B8/real-n", ids)
        self.assertIn("OK A2", err)

    def test_integral_scopes(self):
        for scope in ("integrals", "kappa3", "poles"):
            code, out, _ = run("verify", scope, "--max-n", "4", "--max-m", "3")
            self.assertEqual(code, 0, scope)
            doc = json.loads(out)
            self.assertTrue(doc["ok"])
            self.assertTrue(all(r["fail"] == 0 for r in doc["reports"]))

    def test_failure_exit_code(self):
        bad = IdentityReport("A2", "toy", 3, 1, {"params": {"n": 1}, "lhs": "1", "rhs": "2"})
        with mock.patch.object(vn_skew, "load_suites_safe", return_value={"identities": lambda **kw: [bad]}):
            code, out, err = run("verify", "identities")
        self.assertEqual(code, config.EXIT_VERIFY_FAILED)
        doc = json.loads(out)
        self.assertFalse(doc["ok"])
        self.assertEqual(doc["reports"][0]["counterexample"]["params"], {"n": 1})
        self.assertIn("FAIL A2", err)

    def test_unknown_scope(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                vn_skew.main(["verify", "everything"])
        self.assertEqual(cm.exception.code, 2)


class SimulateCommandTest(unittest.TestCase):
    ARGS = ("simulate", "--m", "2", "--n", "3", "--samples", "2000", "--seed", "5", "--batches", "10")

    def test_reproducible_across_threads(self):
        code1, out1, _ = run(*self.ARGS, "--threads", "1")
        code2, out2, _ = run(*self.ARGS, "--threads", "3")
        self.assertEqual((code1, code2), (0, 0))
        self.assertEqual(out1, out2)
        self.assertEqual(out1.splitlines()[0], "cumulant,estimate,stderr,exact,exact_float,z")

    def test_sample_export(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "samples.csv")
            code, _, _ = run(*self.ARGS, "--output", path)
            self.assertEqual(code, 0)
            with open(path, encoding="utf-8") as f:
                lines = f.read().splitlines()
        self.assertEqual(lines[0], "sample_index,S")
        self.assertEqual(len(lines), 2001)

    def test_induced_statistic_json(self):
        code, out, _ = run(*self.ARGS, "--statistic", "T", "--format", "json")
        self.assertEqual(code, 0)
        rows = json.loads(out)
        self.assertEqual([r["cumulant"] for r in rows], ["kappa1T", "kappa2T", "kappa3T"])

    def test_bad_seed(self):
        self.assertEqual(run("simulate", "--m", "2", "--n", "3", "--seed", "-1")[0], config.EXIT_BAD_ARGS)
        self.assertEqual(run("simulate", "--m", "2", "--n", "3", "--samples", "5")[0], config.EXIT_BAD_ARGS)


class DensityCommandTest(unittest.TestCase):
    def test_table(self):
        code, out, err = run("density", "--m", "2", "--n", "3", "--samples", "20000", "--batches", "10")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "x,empirical,gaussian,gram_charlier")
        self.assertEqual(len(lines), config.DENSITY_GRID_POINTS + 1)
        self.assertIn("L1(empirical,gaussian)=", err)

    def test_needs_two_levels(self):
        self.assertEqual(run("density", "--m", "1", "--n", "3")[0], config.EXIT_BAD_ARGS)


class ScalingCommandTest(unittest.TestCase):
    def test_rows(self):
        code, out, _ = run("scaling", "--c-ratio", "1/2", "--n-list", "4,8")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "n,m,kappa2,n2_kappa2,kappa3,n4_kappa3,gamma1,n_gamma1")
        self.assertEqual([l.split(",")[:2] for l in lines[1:]], [["4", "2"], ["8", "4"]])

    def test_with_simulation_columns(self):
        code, out, _ = run("scaling", "--n-list", "4", "--samples", "1000", "--batches", "10", "--format", "json")
        self.assertEqual(code, 0)
        rows = json.loads(out)
        self.assertIn("mc_kappa2", rows[0])

    def test_bad_inputs(self):
        self.assertEqual(run("scaling", "--c-ratio", "abc")[0], config.EXIT_BAD_ARGS)
        self.assertEqual(run("scaling", "--c-ratio", "3/2")[0], config.EXIT_BAD_ARGS)
        self.assertEqual(run("scaling", "--c-ratio", "1/3", "--n-list", "4")[0], config.EXIT_BAD_ARGS)
        self.assertEqual(run("scaling", "--n-list", "4,x")[0], config.EXIT_BAD_ARGS)


if __name__ == "__main__":
    unittest.main()
