# vn_skew.py
"""
vn-skew: exact cumulants of the von Neumann entropy, verification sweeps, Monte Carlo and
figure data.

    python vn_skew.py cumulants --m 4 --n 8 --format json
    python vn_skew.py verify all --max-n 10
    python vn_skew.py simulate --m 4 --n 8 --samples 1000000 --seed 42 --output samples.csv
    python vn_skew.py density --m 4 --n 8 --samples 1000000 --output fig1.csv
    python vn_skew.py scaling --c-ratio 1/2 --n-list 16,32,64

Data goes to stdout (or --output); progress lines go to stderr.
Exit codes: 0 ok, 1 verification failure, 2 invalid arguments, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

import config
from cumulants import Dims, cumulant_set, kappa1, kappa2, kappa3, scaling_rows, skewness, t_cumulants
from density_approx import build_density_table, left_tail_excess
from ensemble_sim import EigenConvergenceError, STATISTICS, empirical_cumulants, simulate, write_samples_csv
from exact_core import IndeterminateError, PoleResidueError, PolyValue, to_float
from laguerre_integrals import QuadratureError
from suites_registry import load_suites_safe

NUMERIC_ERRORS = (IndeterminateError, PoleResidueError, QuadratureError, EigenConvergenceError)
SCOPES = ("identities", "integrals", "kappa3", "poles", "all")
FORMATS = ("csv", "json")


def _log(msg: str) -> None:
    print(f"[vn_skew] {msg}", file=sys.stderr, flush=True)


# -------------------------
# Run configuration
# -------------------------

@dataclass(frozen=True)
class RunConfig:
    command: str
    m: Optional[int] = None
    n: Optional[int] = None
    samples: int = config.DEFAULT_SAMPLES
    seed: int = config.DEFAULT_SEED
    output: Optional[str] = None
    fmt: str = "csv"
    threads: int = config.DEFAULT_THREADS
    max_m: Optional[int] = None
    max_n: Optional[int] = None
    scope: str = "all"
    statistic: str = "S"
    batches: int = config.MC_BATCHES
    c_ratio: Fraction = Fraction(config.SCALING_RATIO)
    n_list: tuple = tuple(config.SCALING_N_LIST)

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise ValueError(f"[vn_skew] --format must be one of {FORMATS}, got {self.fmt!r}")
        if self.samples < 0:
            raise ValueError(f"[vn_skew] --samples must be >= 0, got {self.samples}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"[vn_skew] --seed must be an unsigned 64-bit int, got {self.seed}")
        if self.batches < 1:
            raise ValueError(f"[vn_skew] --batches must be >= 1, got {self.batches}")
        if self.threads < 1:
            raise ValueError(f"[vn_skew] --threads must be >= 1, got {self.threads}")
        for name in ("max_m", "max_n"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"[vn_skew] --{name.replace('_', '-')} must be >= 1, got {v}")
        if self.scope not in SCOPES:
            raise ValueError(f"[vn_skew] scope must be one of {SCOPES}, got {self.scope!r}")
        if self.statistic not in STATISTICS:
            raise ValueError(f"[vn_skew] --statistic must be one of {STATISTICS}, got {self.statistic!r}")

    def dims(self) -> Dims:
        if self.m is None or self.n is None:
            raise ValueError(f"[vn_skew] {self.command} needs --m and --n")
        return Dims(self.m, self.n)

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        kw: Dict[str, Any] = {"command": ns.command}
        for name in ("m", "n", "seed", "output", "threads", "max_m", "max_n", "scope", "statistic", "batches"):
            v = getattr(ns, name, None)
            if v is not None:
                kw[name] = v
        if getattr(ns, "format", None):
            kw["fmt"] = ns.format
        if getattr(ns, "samples", None) is not None:
            kw["samples"] = ns.samples
        elif ns.command == "scaling":
            kw["samples"] = 0
        if getattr(ns, "c_ratio", None) is not None:
            kw["c_ratio"] = _parse_ratio(ns.c_ratio)
        if getattr(ns, "n_list", None) is not None:
            kw["n_list"] = _parse_n_list(ns.n_list)
        return cls(**kw)


def _parse_ratio(s: str) -> Fraction:
    try:
        c = Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"[vn_skew] --c-ratio must be a rational like 1/2, got {s!r}") from None
    if not 0 < c <= 1:
        raise ValueError(f"[vn_skew] --c-ratio must lie in (0, 1], got {s!r}")
    return c


def _parse_n_list(s: str) -> tuple:
    try:
        out = tuple(int(x) for x in s.split(",") if x.strip())
    except ValueError:
        raise ValueError(f"[vn_skew] --n-list must be comma-separated ints, got {s!r}") from None
    if not out or any(v < 1 for v in out):
        raise ValueError(f"[vn_skew] --n-list must hold positive ints, got {s!r}")
    return out


# -------------------------
# Output
# -------------------------

def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        _log(f"OK wrote {output}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _exact_field(v: PolyValue) -> Dict[str, Any]:
    return {"exact": v.canonical(), "terms": v.to_json(), "float": to_float(v)}


def _frame_text(df: pd.DataFrame, fmt: str) -> str:
    if fmt == "json":
        return df.to_json(orient="records", double_precision=15) + "\n"
    return df.to_csv(index=False, float_format=f"%.{config.CSV_SIGNIFICANT_DIGITS}g")


# -------------------------
# Commands
# -------------------------

def cmd_cumulants(cfg: RunConfig) -> int:
    d = cfg.dims()
    cs = cumulant_set(d)
    values = {"kappa1": cs.kappa1, "kappa2": cs.kappa2, "kappa3": cs.kappa3}
    gamma1 = None if d.m == 1 else cs.skewness_float
    if gamma1 is None:
        _log(f"WARN skewness omitted: zero variance at m = 1 (n={d.n})")
    if cfg.fmt == "json":
        record: Dict[str, Any] = {"command": "cumulants", "m": d.m, "n": d.n}
        record.update({k: _exact_field(v) for k, v in values.items()})
        record["skewness"] = gamma1
        _emit(json.dumps(record, indent=2) + "\n", cfg.output)
        return config.EXIT_OK
    rows = [{"quantity": k, "exact": v.canonical(), "float": to_float(v)} for k, v in values.items()]
    if gamma1 is not None:
        rows.append({"quantity": "skewness", "exact": "", "float": gamma1})
    _emit(_frame_text(pd.DataFrame(rows), "csv"), cfg.output)
    return config.EXIT_OK


def _suite_overrides(suite_id: str, cfg: RunConfig) -> Dict[str, Any]:
    over: Dict[str, Any] = {"max_n": cfg.max_n}
    if suite_id == "identities":
        over["threads"] = cfg.threads
    else:
        over["max_m"] = cfg.max_m
    return over


def cmd_verify(cfg: RunConfig) -> int:
    scope = [s for s in SCOPES if s != "all"] if cfg.scope == "all" else [cfg.scope]
    runners = load_suites_safe(only=scope)
    if not runners:
        raise ValueError(f"[vn_skew] no enabled verification suites for scope {cfg.scope!r} (check config.VERIFY_SUITES)")

    results: Dict[str, List[Any]] = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=cfg.threads) as ex:
        futures = {ex.submit(fn, **_suite_overrides(sid, cfg)): sid for sid, fn in runners.items()}
        for fut in concurrent.futures.as_completed(futures):
            sid = futures[fut]
            results[sid] = fut.result()
            _log(f"suite {sid} finished ({len(results[sid])} reports)")

    reports = [r for sid in scope if sid in results for r in results[sid]]
    ok = all(r.ok for r in reports)
    for r in reports:
        tag = "OK" if r.ok else "FAIL"
        _log(f"{tag} {r.identity_id}: pass={r.passed} fail={r.failed} ({r.grid})")
        if r.counterexample:
            _log(f"  counterexample {json.dumps(r.counterexample)}")
    doc = {"command": "verify", "scope": cfg.scope, "ok": ok, "reports": [r.to_json() for r in reports]}
    _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
    return config.EXIT_OK if ok else config.EXIT_VERIFY_FAILED


def _exact_cumulants(d: Dims, statistic: str) -> List[PolyValue]:
    if statistic == "T":
        tc = t_cumulants(d)
        return [tc.kappa1T, tc.kappa2T, tc.kappa3T]
    return [kappa1(d), kappa2(d), kappa3(d)]


def cmd_simulate(cfg: RunConfig) -> int:
    d = cfg.dims()
    _log(f"simulate m={d.m} n={d.n} samples={cfg.samples} seed={cfg.seed} statistic={cfg.statistic}")
    res = simulate(d, cfg.samples, cfg.seed, cfg.statistic, cfg.batches, cfg.threads)
    emp = empirical_cumulants(res.stats)
    exact = _exact_cumulants(d, cfg.statistic)
    z = emp.z_scores([to_float(v) for v in exact])
    rows = []
    for i, (est, se) in enumerate(((emp.k1, emp.se1), (emp.k2, emp.se2), (emp.k3, emp.se3)), start=1):
        rows.append({
            "cumulant": f"kappa{i}{'T' if cfg.statistic == 'T' else ''}",
            "estimate": est,
            "stderr": se,
            "exact": exact[i - 1].canonical(),
            "exact_float": to_float(exact[i - 1]),
            "z": z[i - 1],
        })
        tag = "OK" if abs(z[i - 1]) < 4.0 else "WARN"
        _log(f"{tag} kappa{i}: estimate={est:.10g} exact={to_float(exact[i - 1]):.10g} z={z[i - 1]:.3f}")
    if cfg.output:
        write_samples_csv(res.values, cfg.output, cfg.statistic)
        _log(f"OK wrote {cfg.output}")
    _emit(_frame_text(pd.DataFrame(rows), cfg.fmt), None)
    return config.EXIT_OK


def cmd_density(cfg: RunConfig) -> int:
    d = cfg.dims()
    if d.m < 2:
        raise ValueError(f"[vn_skew] density needs m >= 2 (the entropy is constant at m = 1), got m={d.m}")
    _log(f"density m={d.m} n={d.n} samples={cfg.samples} seed={cfg.seed}")
    res = simulate(d, cfg.samples, cfg.seed, "S", cfg.batches, cfg.threads)
    table = build_density_table(res.values, to_float(kappa1(d)), to_float(kappa2(d)), skewness(d))
    l1_g = table.l1("empirical", "gaussian")
    l1_gc = table.l1("empirical", "gram_charlier")
    l1_x = table.l1("gaussian", "gram_charlier")
    _log(
        f"L1(empirical,gaussian)={l1_g:.6g} L1(empirical,gram_charlier)={l1_gc:.6g} "
        f"L1(gaussian,gram_charlier)={l1_x:.6g} left_tail_excess={left_tail_excess(table):.6g}"
    )
    if cfg.fmt == "json":
        _emit(_frame_text(table.to_frame(), "json"), cfg.output)
    else:
        buf = io.StringIO()
        table.to_csv(buf)
        _emit(buf.getvalue(), cfg.output)
    return config.EXIT_OK


def cmd_scaling(cfg: RunConfig) -> int:
    rows = scaling_rows(cfg.c_ratio, cfg.n_list)
    if cfg.samples:
        for row in rows:
            d = Dims(row["m"], row["n"])
            emp = empirical_cumulants(simulate(d, cfg.samples, cfg.seed, "S", cfg.batches, cfg.threads).stats)
            row["mc_kappa2"] = emp.k2
            row["mc_kappa3"] = emp.k3
            _log(f"scaling n={row['n']} simulated")
    _emit(_frame_text(pd.DataFrame(rows), cfg.fmt), cfg.output)
    return config.EXIT_OK


COMMANDS = {
    "cumulants": cmd_cumulants,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
    "density": cmd_density,
    "scaling": cmd_scaling,
}


# -------------------------
# Entry point
# -------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vn-skew", description="Exact and simulated cumulants of the von Neumann entropy.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, *, dims: bool = True, mc: bool = False) -> None:
        if dims:
            sp.add_argument("--m", type=int)
            sp.add_argument("--n", type=int)
        if mc:
            sp.add_argument("--samples", type=int)
            sp.add_argument("--seed", type=int)
            sp.add_argument("--batches", type=int)
        sp.add_argument("--format", choices=FORMATS)
        sp.add_argument("--output")
        sp.add_argument("--threads", type=int)

    common(sub.add_parser("cumulants", help="closed-form kappa1..kappa3 and skewness"))

    v = sub.add_parser("verify", help="exact verification sweeps")
    v.add_argument("scope", nargs="?", default="all", choices=SCOPES)
    v.add_argument("--max-m", type=int)
    v.add_argument("--max-n", type=int)
    common(v, dims=False)

    s = sub.add_parser("simulate", help="Monte Carlo cumulants with z-scores")
    s.add_argument("--statistic", choices=STATISTICS)
    common(s, mc=True)

    common(sub.add_parser("density", help="empirical, Gaussian and Gram-Charlier density table"), mc=True)

    sc = sub.add_parser("scaling", help="closed-form scaling along m = c n")
    sc.add_argument("--c-ratio")
    sc.add_argument("--n-list")
    common(sc, dims=False, mc=True)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except NUMERIC_ERRORS as e:
        _log(f"FAIL numerical: {e}")
        return config.EXIT_NUMERIC
    except (ValueError, TypeError) as e:
        _log(f"FAIL invalid arguments: {e}")
        return config.EXIT_BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
