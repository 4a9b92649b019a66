# ensemble_sim.py
"""
Monte Carlo over random pure bipartite states: Ginibre draws X (m x n), Wishart eigenvalues
theta of XX^+, fixed-trace spectra lambda = theta / sum(theta), the entropy S and the
induced entropy T, and k-statistics with batch standard errors.

Batches are independent (one Philox substream per (seed, batch index)), so any
batch-to-worker assignment gives the same numbers.
"""
from __future__ import annotations

import concurrent.futures
import math
from dataclasses import dataclass
from functools import reduce
from typing import IO, Any, Callable, List, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy import integrate
from scipy.special import xlogy

import config
from cumulants import Dims
from laguerre_integrals import QuadratureError


class EigenConvergenceError(RuntimeError):
    """Jacobi sweeps hit the iteration cap, or a Wishart eigenvalue came out clearly negative."""


STATISTICS = ("S", "T")
_CHUNK = 4096


# -------------------------
# Sampling
# -------------------------

def make_rng(seed: int, batch: int = 0) -> np.random.Generator:
    if not isinstance(seed, (int, np.integer)) or seed < 0 or seed >= 2 ** 64:
        raise ValueError(f"[ensemble_sim] seed must be an unsigned 64-bit int, got {seed!r}")
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(batch),))
    return np.random.Generator(np.random.Philox(ss))


def _ginibre(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    # standard complex normal: E|x|^2 = 1
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)


def sample_ginibre(d: Dims, rng: np.random.Generator) -> np.ndarray:
    return _ginibre(rng, (d.m, d.n))


# -------------------------
# Eigenvalues
# -------------------------

def _off_norm(A: np.ndarray) -> np.ndarray:
    total = np.sum(np.abs(A) ** 2, axis=(1, 2))
    diag = np.sum(np.abs(np.diagonal(A, axis1=1, axis2=2)) ** 2, axis=1)
    return np.sqrt(np.maximum(total - diag, 0.0))


def _rotate(A: np.ndarray, p: int, q: int, floor: np.ndarray) -> None:
    # zero A[:, p, q] in every matrix of the stack: phase to a real 2x2 block, then a real Jacobi rotation.
    # entries at or below `floor` are already at rounding level and are set to 0 without a rotation
    a = A[:, p, p].real
    b = A[:, q, q].real
    c = A[:, p, q]
    r = np.abs(c)
    live = r > floor
    r_safe = np.where(live, r, 1.0)
    phase = np.where(live, np.exp(1j * np.angle(c)), 1.0)
    tau = np.where(live, (b - a) / (2.0 * r_safe), 0.0)
    t = np.where(live, np.where(tau >= 0.0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau)), 0.0)
    cs = 1.0 / np.sqrt(1.0 + t * t)
    sn = t * cs
    back = np.conj(phase)

    col_p = A[:, :, p] * cs[:, None] - A[:, :, q] * (sn * back)[:, None]
    col_q = A[:, :, p] * sn[:, None] + A[:, :, q] * (cs * back)[:, None]
    A[:, :, p] = col_p
    A[:, :, q] = col_q

    row_p = A[:, p, :] * cs[:, None] - A[:, q, :] * (sn * phase)[:, None]
    row_q = A[:, p, :] * sn[:, None] + A[:, q, :] * (cs * phase)[:, None]
    A[:, p, :] = row_p
    A[:, q, :] = row_q
    A[:, p, q] = 0.0
    A[:, q, p] = 0.0


def jacobi_eigenvalues(
    H: np.ndarray,
    tol: float = config.JACOBI_TOL,
    max_sweeps: int = config.JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """
    Eigenvalues of a Hermitian matrix, or of a stack (B, m, m), by cyclic Jacobi sweeps.
    A matrix stops being rotated once its off-diagonal Frobenius norm is <= tol * |trace|;
    the call returns when every matrix of the stack got there.
    Returned non-increasing along the last axis.
    """
    A = np.array(H, dtype=complex, copy=True)
    single = A.ndim == 2
    if single:
        A = A[None]
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise ValueError(f"[ensemble_sim] jacobi_eigenvalues: need square matrices, got shape {np.shape(H)}")
    m = A.shape[1]
    scale = np.abs(np.trace(A, axis1=1, axis2=2).real)
    scale = np.where(scale > 0.0, scale, 1.0)
    floor = np.finfo(float).eps * scale
    for sweep in range(max_sweeps + 1):
        active = _off_norm(A) > tol * scale
        if not np.any(active):
            break
        if sweep == max_sweeps:
            raise EigenConvergenceError(
                f"[ensemble_sim] Jacobi did not converge in {max_sweeps} sweeps "
                f"(m={m}, batch={A.shape[0]}, unconverged={int(np.count_nonzero(active))})"
            )
        sub = A[active]
        sub_floor = floor[active]
        for p in range(m - 1):
            for q in range(p + 1, m):
                _rotate(sub, p, q, sub_floor)
        A[active] = sub
    vals = -np.sort(-np.diagonal(A, axis1=1, axis2=2).real, axis=1)
    return vals[0] if single else vals


def _clamp(theta: np.ndarray) -> np.ndarray:
    trace = np.sum(theta, axis=-1, keepdims=True)
    floor = config.EIGEN_CLAMP * trace
    if np.any(theta < floor):
        raise EigenConvergenceError(f"[ensemble_sim] negative Wishart eigenvalue {float(np.min(theta))!r}")
    return np.where(theta < 0.0, 0.0, theta)


def _wishart_stack(X: np.ndarray) -> np.ndarray:
    W = X @ np.conj(np.swapaxes(X, -1, -2))
    return _clamp(jacobi_eigenvalues(W))


@dataclass(frozen=True, eq=False)
class EigenSpectrum:
    values: np.ndarray
    normalized: bool

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or v.size == 0:
            raise ValueError(f"[ensemble_sim] EigenSpectrum: need a non-empty 1-D array, got shape {v.shape}")
        if np.any(np.diff(v) > 0.0):
            raise ValueError("[ensemble_sim] EigenSpectrum: values must be non-increasing")
        if np.any(v < config.EIGEN_CLAMP * max(1.0, float(np.sum(v)))):
            raise ValueError(f"[ensemble_sim] EigenSpectrum: negative value {float(v.min())!r}")
        if self.normalized and abs(float(np.sum(v)) - 1.0) > 1e-12:
            raise ValueError(f"[ensemble_sim] EigenSpectrum: normalized values sum to {float(np.sum(v))!r}")
        object.__setattr__(self, "values", np.where(v < 0.0, 0.0, v))


def wishart_eigenvalues(X: np.ndarray) -> EigenSpectrum:
    """Unnormalized eigenvalues theta of XX^+."""
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[0] > X.shape[1]:
        raise ValueError(f"[ensemble_sim] need an m x n matrix with m <= n, got shape {X.shape}")
    return EigenSpectrum(_wishart_stack(X[None])[0], normalized=False)


def fixed_trace_eigenvalues(X: np.ndarray) -> EigenSpectrum:
    """Eigenvalues of XX^+ / tr(XX^+)."""
    theta = wishart_eigenvalues(X).values
    return EigenSpectrum(theta / np.sum(theta), normalized=True)


# -------------------------
# Entropies
# -------------------------

def _entropy_rows(lam: np.ndarray) -> np.ndarray:
    # + 0.0 keeps pure states at +0.0
    return -np.sum(xlogy(lam, lam), axis=-1) + 0.0


def _induced_rows(theta: np.ndarray) -> np.ndarray:
    return np.sum(xlogy(theta, theta), axis=-1)


def entropy_S(spec: EigenSpectrum) -> float:
    if not spec.normalized:
        raise ValueError("[ensemble_sim] entropy_S needs a normalized spectrum")
    return float(_entropy_rows(spec.values))


def induced_T(spec: EigenSpectrum) -> float:
    if spec.normalized:
        raise ValueError("[ensemble_sim] induced_T needs unnormalized Wishart eigenvalues")
    return float(_induced_rows(spec.values))


def entropy_from_T(spec: EigenSpectrum) -> float:
    """S = (r ln r - T) / r with r = sum theta."""
    r = float(np.sum(spec.values))
    return (r * math.log(r) - induced_T(spec)) / r


# -------------------------
# Streaming statistics
# -------------------------

@dataclass(frozen=True)
class BatchMoments:
    """Count, mean and central power sums M2..M4 of one batch (or of merged batches)."""
    index: int
    count: int
    mean: float
    m2: float
    m3: float
    m4: float

    @classmethod
    def from_values(cls, index: int, values: Any) -> "BatchMoments":
        x = np.asarray(values, dtype=float).ravel()
        if x.size == 0:
            raise ValueError(f"[ensemble_sim] batch {index} is empty")
        mean = float(np.mean(x))
        dev = x - mean
        dev2 = dev * dev
        return cls(index, int(x.size), mean, float(np.sum(dev2)), float(np.sum(dev2 * dev)), float(np.sum(dev2 * dev2)))

    def combine(self, other: "BatchMoments") -> "BatchMoments":
        na, nb = self.count, other.count
        n = na + nb
        delta = other.mean - self.mean
        dn = delta / n
        mean = self.mean + nb * dn
        m2 = self.m2 + other.m2 + delta * dn * na * nb
        m3 = (
            self.m3 + other.m3
            + delta * dn * dn * na * nb * (na - nb)
            + 3.0 * dn * (na * other.m2 - nb * self.m2)
        )
        m4 = (
            self.m4 + other.m4
            + delta * dn ** 3 * na * nb * (na * na - na * nb + nb * nb)
            + 6.0 * dn * dn * (na * na * other.m2 + nb * nb * self.m2)
            + 4.0 * dn * (na * other.m3 - nb * self.m3)
        )
        return BatchMoments(min(self.index, other.index), n, mean, m2, m3, m4)

    def kstats(self) -> Tuple[float, float, float]:
        """Unbiased k1, k2, k3."""
        n = self.count
        k2 = self.m2 / (n - 1) if n > 1 else math.nan
        k3 = n * self.m3 / ((n - 1) * (n - 2)) if n > 2 else math.nan
        return self.mean, k2, k3


@dataclass(frozen=True)
class SampleStats:
    batches: Tuple[BatchMoments, ...]
    statistic: str = "S"

    def __post_init__(self) -> None:
        if not self.batches:
            raise ValueError("[ensemble_sim] SampleStats: need at least one batch")
        idx = [b.index for b in self.batches]
        if idx != sorted(set(idx)):
            raise ValueError(f"[ensemble_sim] SampleStats: batch indices must be unique and sorted, got {idx}")

    @property
    def count(self) -> int:
        return sum(b.count for b in self.batches)

    @property
    def batch_count(self) -> int:
        return len(self.batches)

    def totals(self) -> BatchMoments:
        return reduce(BatchMoments.combine, self.batches)

    def merge(self, other: "SampleStats") -> "SampleStats":
        if other.statistic != self.statistic:
            raise ValueError(f"[ensemble_sim] cannot merge {self.statistic} stats with {other.statistic} stats")
        if {b.index for b in self.batches} & {b.index for b in other.batches}:
            raise ValueError("[ensemble_sim] cannot merge stats that share batch indices")
        merged = sorted(self.batches + other.batches, key=lambda b: b.index)
        return SampleStats(tuple(merged), self.statistic)


def stats_from_values(values: Any, batches: int = config.MC_BATCHES, statistic: str = "S") -> SampleStats:
    x = np.asarray(values, dtype=float).ravel()
    if batches < 1 or x.size < batches:
        raise ValueError(f"[ensemble_sim] need at least {batches} values for {batches} batches, got {x.size}")
    parts = np.array_split(x, batches)
    return SampleStats(tuple(BatchMoments.from_values(i, p) for i, p in enumerate(parts)), statistic)


@dataclass(frozen=True)
class EmpiricalCumulants:
    count: int
    k1: float
    k2: float
    k3: float
    se1: float
    se2: float
    se3: float

    def z_scores(self, exact: Sequence[float]) -> Tuple[float, float, float]:
        out = []
        for est, se, ref in zip((self.k1, self.k2, self.k3), (self.se1, self.se2, self.se3), exact):
            diff = est - float(ref)
            if se > 0.0:
                out.append(diff / se)
            else:
                out.append(0.0 if diff == 0.0 else math.copysign(math.inf, diff))
        return tuple(out)  # type: ignore[return-value]


def empirical_cumulants(stats: SampleStats) -> EmpiricalCumulants:
    """k-statistics of the whole stream; standard errors from the spread of per-batch k-statistics."""
    if stats.count < config.MIN_KSTAT_COUNT:
        raise ValueError(f"[ensemble_sim] need at least {config.MIN_KSTAT_COUNT} samples, got {stats.count}")
    k1, k2, k3 = stats.totals().kstats()
    B = stats.batch_count
    if B >= 2 and all(b.count >= 3 for b in stats.batches):
        per = np.array([b.kstats() for b in stats.batches])
        se = np.std(per, axis=0, ddof=1) / math.sqrt(B)
        se1, se2, se3 = (float(v) for v in se)
    else:
        se1 = se2 = se3 = math.nan
    return EmpiricalCumulants(stats.count, k1, k2, k3, se1, se2, se3)


# -------------------------
# Batches
# -------------------------

def batch_values(d: Dims, count: int, seed: int, index: int, statistic: str = "S") -> np.ndarray:
    """S (or T) for `count` draws from substream (seed, index)."""
    if statistic not in STATISTICS:
        raise ValueError(f"[ensemble_sim] statistic must be one of {STATISTICS}, got {statistic!r}")
    rng = make_rng(seed, index)
    out = np.empty(count)
    done = 0
    while done < count:
        k = min(_CHUNK, count - done)
        theta = _wishart_stack(_ginibre(rng, (k, d.m, d.n)))
        if statistic == "T":
            out[done:done + k] = _induced_rows(theta)
        else:
            out[done:done + k] = _entropy_rows(theta / np.sum(theta, axis=1, keepdims=True))
        done += k
    return out


@dataclass(frozen=True, eq=False)
class SimulationResult:
    values: np.ndarray
    stats: SampleStats


def _batch_sizes(samples: int, batches: int) -> List[int]:
    base, extra = divmod(samples, batches)
    return [base + (1 if i < extra else 0) for i in range(batches)]


def simulate(
    d: Dims,
    samples: int,
    seed: int = config.DEFAULT_SEED,
    statistic: str = "S",
    batches: int = config.MC_BATCHES,
    threads: int = 1,
) -> SimulationResult:
    if not isinstance(samples, int) or samples < batches:
        raise ValueError(f"[ensemble_sim] samples ({samples!r}) must be an int >= batch count ({batches})")
    if d.m > d.n:
        raise ValueError(f"[ensemble_sim] need m <= n, got {d}")
    sizes = _batch_sizes(samples, batches)

    def _one(i: int) -> np.ndarray:
        vals = batch_values(d, sizes[i], seed, i, statistic)
        if config.DEBUG:
            print(f"[ensemble_sim] batch {i + 1}/{batches} m={d.m} n={d.n} done", flush=True)
        return vals

    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        parts = list(ex.map(_one, range(batches)))
    stats = SampleStats(tuple(BatchMoments.from_values(i, p) for i, p in enumerate(parts)), statistic)
    return SimulationResult(np.concatenate(parts), stats)


def run_batch(
    d: Dims,
    samples: int,
    seed: int = config.DEFAULT_SEED,
    statistic: str = "S",
    batches: int = config.MC_BATCHES,
    threads: int = 1,
) -> SampleStats:
    return simulate(d, samples, seed, statistic, batches, threads).stats


def samples_frame(values: Any, statistic: str = "S") -> pd.DataFrame:
    x = np.asarray(values, dtype=float).ravel()
    return pd.DataFrame({"sample_index": np.arange(x.size), statistic: x})


def write_samples_csv(values: Any, out: Union[str, IO[str]], statistic: str = "S") -> None:
    samples_frame(values, statistic).to_csv(
        out, index=False, float_format=f"%.{config.CSV_SIGNIFICANT_DIGITS}g"
    )


# -------------------------
# m = 2 oracle
# -------------------------

def simplex_quadrature_m2(n: int, integrand: Callable[[float], float], tol: float = 1e-10) -> float:
    """E[f(lambda)] for the m = 2 fixed-trace density, proportional to (2l-1)^2 (l(1-l))^(n-2) on (0, 1)."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"[ensemble_sim] simplex_quadrature_m2 needs integer n >= 2, got {n!r}")

    def rho(lam: float) -> float:
        return (2.0 * lam - 1.0) ** 2 * (lam * (1.0 - lam)) ** (n - 2)

    norm, err_n = integrate.quad(rho, 0.0, 1.0, epsabs=0.0, epsrel=tol, limit=200)
    val, err_v = integrate.quad(lambda x: integrand(x) * rho(x), 0.0, 1.0, epsabs=tol * norm, epsrel=tol, limit=200)
    if err_n > 100 * tol * norm or err_v > 100 * tol * max(abs(val), norm):
        raise QuadratureError(f"[ensemble_sim] simplex_quadrature_m2: error estimate too large (n={n})")
    return val / norm


def binary_entropy(lam: float) -> float:
    """S of the spectrum {lam, 1 - lam}."""
    return float(-xlogy(lam, lam) - xlogy(1.0 - lam, 1.0 - lam))
