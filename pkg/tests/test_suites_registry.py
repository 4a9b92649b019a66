# tests/test_suites_registry.py
from __future__ import annotations

import unittest

import config
from identity_suite import IdentityReport
from suites_registry import _validate_payload, _wrap_runner, load_suites_safe


def _report(passed: int = 1, failed: int = 0) -> IdentityReport:
    r = IdentityReport("toy", "grid", passed, failed)
    if failed:
        r.counterexample = {"params": {}, "lhs": "1", "rhs": "2"}
    return r


class LoadTest(unittest.TestCase):
    def test_all_enabled_suites_load(self):
        runners = load_suites_safe()
        self.assertEqual(set(runners), {k for k, v in config.VERIFY_SUITES.items() if v.get("enabled")})

    def test_only_filters(self):
        self.assertEqual(list(load_suites_safe(only=["poles"])), ["poles"])
        with self.assertRaises(ValueError):
            load_suites_safe(only=["poles", "weather"])

    def test_runner_honours_overrides(self):
        run = load_suites_safe(only=["kappa3"])["kappa3"]
        reports = run(max_n=3, max_m=None)
        self.assertTrue(all(r.ok for r in reports))
        self.assertIn("n <= 3", reports[0].grid)


class PayloadTest(unittest.TestCase):
    def test_rejects_malformed_payloads(self):
        with self.assertRaises(TypeError):
            _validate_payload("s", {"x": 1})
        with self.assertRaises(ValueError):
            _validate_payload("s", [])
        with self.assertRaises(ValueError):
            _validate_payload("s", [_report(0, 0)])
        bad = _report(1, 1)
        bad.counterexample = None
        with self.assertRaises(ValueError):
            _validate_payload("s", [bad])
        with self.assertRaises(ValueError):
            _validate_payload("s", ["not a report"])

    def test_failures_are_valid_payloads(self):
        payload = [_report(), _report(3, 2)]
        self.assertIs(_validate_payload("s", payload), payload)

    def test_wrap_merges_params(self):
        seen = {}

        def fn(**kw):
            seen.update(kw)
            return [_report()]

        run = _wrap_runner("s", fn, {"max_n": 5, "max_a": 2})
        run(max_n=None, threads=3)
        self.assertEqual(seen, {"max_n": 5, "max_a": 2, "threads": 3})
        run(max_n=9)
        self.assertEqual(seen["max_n"], 9)


if __name__ == "__main__":
    unittest.main()
