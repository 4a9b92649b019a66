from __future__ import annotations

import importlib
from typing import Any, Callable, Dict, List, Optional

from config import VERIFY_SUITES
from identity_suite import IdentityReport

# Suite contract expected by vn_skew.py (and enforced here):
#   func(**params) -> list[IdentityReport], non-empty,
#   each report with pass + fail > 0 and a counterexample iff fail > 0
Runner = Callable[..., List[IdentityReport]]


def _is_report_ok(r: Any) -> bool:
    return (
        isinstance(r, IdentityReport)
        and isinstance(r.identity_id, str) and bool(r.identity_id)
        and isinstance(r.passed, int) and isinstance(r.failed, int)
        and r.passed >= 0 and r.failed >= 0
        and r.passed + r.failed > 0
        and (r.counterexample is not None) == (r.failed > 0)
    )


def _validate_payload(suite_id: str, payload: Any) -> List[IdentityReport]:
    if not isinstance(payload, list):
        raise TypeError(f"[suites_registry] {suite_id}: payload must be list, got {type(payload).__name__}")
    if not payload:
        raise ValueError(f"[suites_registry] {suite_id}: suite returned no reports")
    for i, r in enumerate(payload):
        if not _is_report_ok(r):
            raise ValueError(f"[suites_registry] {suite_id}: invalid report at index {i}: {r!r}")
    return payload


def _wrap_runner(suite_id: str, fn: Callable[..., Any], params: Optional[dict]) -> Runner:
    defaults = dict(params or {})

    def _run(**overrides: Any) -> List[IdentityReport]:
        kwargs = {**defaults, **{k: v for k, v in overrides.items() if v is not None}}
        return _validate_payload(suite_id, fn(**kwargs))
    return _run


def load_suites_safe(only: Optional[List[str]] = None) -> Dict[str, Runner]:
    """
    Loads enabled verification suites and returns:
        suite_id -> runner(**overrides) -> validated list of IdentityReport

    Config params are bound at load time; None-valued overrides keep the config default.
    """
    if only is not None:
        unknown = sorted(set(only) - set(VERIFY_SUITES))
        if unknown:
            raise ValueError(f"[suites_registry] unknown suite(s) {unknown}; expected some of {sorted(VERIFY_SUITES)}")

    out: Dict[str, Runner] = {}
    for suite_id, spec in (VERIFY_SUITES or {}).items():
        if only is not None and suite_id not in only:
            continue
        if not spec.get("enabled"):
            continue

        mod_name = spec["module"]
        fn_name = spec["func"]
        params = spec.get("params") or None

        mod = importlib.import_module(mod_name)
        fn = getattr(mod, fn_name)

        if not callable(fn):
            raise TypeError(f"[suites_registry] {suite_id}: {mod_name}.{fn_name} is not callable")

        out[suite_id] = _wrap_runner(suite_id, fn, params)

    return out
