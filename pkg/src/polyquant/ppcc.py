"""Probability plot correlation coefficient fitting of the shape parameter.

Sort the sample, pair the order statistics with model quantiles at Hazen
plotting positions, and take the Pearson correlation; sweeping the shape
over a grid and maximizing the correlation picks the best-fitting member
of the family, which is then labeled with the nearest named family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distribution import PolyDist
from .errors import DegenerateDataError, DomainError
from .families import FamilyBands, FamilyLabel, nearest_named_family
from .polylog import EvalOptions

__all__ = ["PpccProfile", "plotting_positions", "ppcc", "fit_shape"]

# quantiles blow up at p -> 1 for s <= 1; tiny samples keep Pearson finite
# by clamping positions into this closed interval
_P_CLAMP = (1e-12, 1.0 - 1e-12)


@dataclass(frozen=True)
class PpccProfile:
    grid: np.ndarray
    r: np.ndarray
    best_s: float
    best_r: float
    family: FamilyLabel


def plotting_positions(n: int) -> np.ndarray:
    """Hazen positions (i - 0.5)/n for i = 1..n, strictly inside (0, 1)."""
    if not float(n).is_integer() or n < 1:
        raise DomainError(f"need at least one observation, got n={n!r}")
    return (np.arange(1, int(n) + 1) - 0.5) / float(n)


def _clean_data(data) -> np.ndarray:
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim != 1:
        arr = arr.ravel()
    if arr.size < 3:
        raise DomainError(f"need at least 3 observations, got {arr.size}")
    if np.isnan(arr).any():
        raise DomainError("data contains NaN")
    if (arr < 0.0).any():
        raise DomainError("data must be non-negative")
    if np.ptp(arr) == 0.0:
        raise DegenerateDataError("data has zero variance")
    return np.sort(arr)


def ppcc(data, s: float, opts: EvalOptions | None = None) -> float:
    """Pearson correlation between order statistics and model quantiles.

    Invariant under positive affine transformation of the data, so location
    and scale drop out and only the shape matters.
    """
    srt = _clean_data(data)
    return _ppcc_sorted(srt, float(s), opts)


def _ppcc_sorted(srt: np.ndarray, s: float, opts: EvalOptions | None) -> float:
    pos = plotting_positions(srt.size)
    if s <= 1.0:
        pos = np.clip(pos, *_P_CLAMP)
    q = PolyDist(s).quantile(pos, opts)
    return float(np.corrcoef(srt, q)[0, 1])


def fit_shape(
    data,
    grid,
    opts: EvalOptions | None = None,
    bands: FamilyBands | None = None,
) -> PpccProfile:
    """Sweep the shape grid, maximize the PPCC, label the winner.

    One local refinement pass adds the midpoints around the coarse argmax
    (half the local grid step); the returned profile contains every
    evaluated point, sorted by shape.  Exact ties go to the smallest shape.
    """
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("grid must be a non-empty 1-d array of shapes")
    if grid.size > 1 and not (np.diff(grid) > 0).all():
        raise DomainError("grid must be strictly ascending")
    srt = _clean_data(data)

    r = np.array([_ppcc_sorted(srt, float(s), opts) for s in grid])
    i = int(np.argmax(r))
    extra = []
    if i > 0:
        extra.append(0.5 * (grid[i - 1] + grid[i]))
    if i + 1 < grid.size:
        extra.append(0.5 * (grid[i] + grid[i + 1]))
    if extra:
        extra = np.array(extra)
        r_extra = np.array([_ppcc_sorted(srt, float(s), opts) for s in extra])
        all_s = np.concatenate([grid, extra])
        all_r = np.concatenate([r, r_extra])
        order = np.argsort(all_s, kind="stable")
        all_s, all_r = all_s[order], all_r[order]
    else:
        all_s, all_r = grid, r

    j = int(np.argmax(all_r))  # argmax returns the first (smallest s) on ties
    best_s = float(all_s[j])
    best_r = float(all_r[j])
    return PpccProfile(
        grid=all_s,
        r=all_r,
        best_s=best_s,
        best_r=best_r,
        family=nearest_named_family(best_s, bands),
    )
