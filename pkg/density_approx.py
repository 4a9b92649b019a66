# density_approx.py
"""
Gaussian and Gram-Charlier approximations of the standardized entropy density,
kernel density estimates of simulated samples, and the table behind the figures.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO, Any, Dict, Optional, Union

import numpy as np
import pandas as pd
from scipy import stats
from scipy.integrate import trapezoid

import config

CURVES = ("empirical", "gaussian", "gram_charlier")


def hermite(k: int, x: Any) -> Any:
    """Probabilists' Hermite polynomial He_k(x) via He_{k+1} = x He_k - k He_{k-1}."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"[density_approx] hermite: degree must be an int >= 0, got {k!r}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if k == 0:
        return prev if prev.ndim else float(prev)
    cur = x.copy()
    for j in range(1, k):
        prev, cur = cur, x * cur - j * prev
    return cur if cur.ndim else float(cur)


def gaussian_pdf(x: Any) -> Any:
    out = np.exp(-0.5 * np.asarray(x, dtype=float) ** 2) / math.sqrt(2.0 * math.pi)
    return out if np.ndim(out) else float(out)


def gram_charlier_pdf(x: Any, gamma1: float) -> Any:
    """phi(x) (1 + gamma1/6 He_3(x)); may dip below zero in the tails and is left that way."""
    x = np.asarray(x, dtype=float)
    out = gaussian_pdf(x) * (1.0 + gamma1 / 6.0 * hermite(3, x))
    return out if np.ndim(out) else float(out)


def standardize(samples: Any, k1: float, k2: float) -> np.ndarray:
    if not k2 > 0.0:
        raise ValueError(f"[density_approx] standardize: variance must be > 0, got {k2!r}")
    return (np.asarray(samples, dtype=float) - k1) / math.sqrt(k2)


def silverman_bandwidth(samples: Any) -> float:
    x = np.asarray(samples, dtype=float).ravel()
    sigma = float(np.std(x, ddof=1))
    q75, q25 = np.percentile(x, [75.0, 25.0])
    spread = min(sigma, float(q75 - q25) / 1.34) if q75 > q25 else sigma
    return 0.9 * spread * x.size ** (-0.2)


def estimate_density(samples: Any, grid: Any) -> np.ndarray:
    """Gaussian KDE on `grid` with Silverman's bandwidth."""
    x = np.asarray(samples, dtype=float).ravel()
    if x.size < config.KDE_MIN_SAMPLES:
        raise ValueError(f"[density_approx] estimate_density needs >= {config.KDE_MIN_SAMPLES} samples, got {x.size}")
    sigma = float(np.std(x, ddof=1))
    if not sigma > 0.0:
        raise ValueError("[density_approx] estimate_density: samples have zero spread")
    kde = stats.gaussian_kde(x, bw_method=silverman_bandwidth(x) / sigma)
    return kde(np.asarray(grid, dtype=float))


def default_grid() -> np.ndarray:
    return np.linspace(config.DENSITY_GRID_LO, config.DENSITY_GRID_HI, config.DENSITY_GRID_POINTS)


def l1_distance(a: Any, b: Any, grid: Any) -> float:
    a, b, g = (np.asarray(v, dtype=float) for v in (a, b, grid))
    if not (a.shape == b.shape == g.shape) or g.ndim != 1:
        raise ValueError(f"[density_approx] l1_distance: grid mismatch {a.shape}, {b.shape}, {g.shape}")
    return float(trapezoid(np.abs(a - b), g))


@dataclass(frozen=True, eq=False)
class DensityTable:
    grid: np.ndarray
    curves: Dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        g = np.asarray(self.grid, dtype=float)
        if g.ndim != 1 or g.size < 2 or np.any(np.diff(g) <= 0.0):
            raise ValueError("[density_approx] DensityTable: grid must be strictly increasing with >= 2 points")
        for name, vals in self.curves.items():
            if name not in CURVES:
                raise ValueError(f"[density_approx] DensityTable: unknown curve {name!r}")
            if np.shape(vals) != g.shape:
                raise ValueError(f"[density_approx] DensityTable: curve {name} has shape {np.shape(vals)}, grid {g.shape}")

    def mass(self, name: str) -> float:
        return float(trapezoid(self.curves[name], self.grid))

    def l1(self, a: str, b: str) -> float:
        return l1_distance(self.curves[a], self.curves[b], self.grid)

    def to_frame(self) -> pd.DataFrame:
        cols: Dict[str, Any] = {"x": self.grid}
        for name in CURVES:
            if name in self.curves:
                cols[name] = self.curves[name]
        return pd.DataFrame(cols)

    def to_csv(self, out: Union[str, IO[str], None] = None) -> Optional[str]:
        return self.to_frame().to_csv(out, index=False, float_format=f"%.{config.CSV_SIGNIFICANT_DIGITS}g")


def left_tail_excess(table: DensityTable) -> float:
    """Area of the empirical curve left of its mode minus the Gaussian's area left of 0."""
    emp = table.curves["empirical"]
    mode = int(np.argmax(emp))
    left = float(trapezoid(emp[: mode + 1], table.grid[: mode + 1]))
    g = table.grid
    gauss = table.curves.get("gaussian", gaussian_pdf(g))
    zero = int(np.searchsorted(g, 0.0))
    gauss_left = float(trapezoid(gauss[: zero + 1], g[: zero + 1]))
    return left - gauss_left


def build_density_table(
    samples: Any,
    k1: float,
    k2: float,
    gamma1: float,
    grid: Optional[Any] = None,
) -> DensityTable:
    """Standardize raw samples with the exact cumulants and tabulate the three curves."""
    g = default_grid() if grid is None else np.asarray(grid, dtype=float)
    x = standardize(samples, k1, k2)
    return DensityTable(
        grid=g,
        curves={
            "empirical": estimate_density(x, g),
            "gaussian": gaussian_pdf(g),
            "gram_charlier": gram_charlier_pdf(g, gamma1),
        },
    )
