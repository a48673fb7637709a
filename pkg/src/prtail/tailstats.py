"""Empirical tail analysis: CCDF tables and maximum-likelihood tail fits.

The tail-index estimator is the Hill/Newman MLE for the CCDF index,
alpha = n_tail / sum(ln(x_i / x_min)) over the samples at or above a
threshold x_min. The density (histogram) exponent is alpha + 1; all
exponents reported by this module are CCDF exponents.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFitError, ParameterError

DEFAULT_QUANTILE_BAND = (0.99, 0.9999)
DEFAULT_TOP_FRACTION = 0.1


def _values(samples) -> np.ndarray:
    values = np.asarray(getattr(samples, "values", samples), dtype=float)
    if values.ndim != 1:
        raise ParameterError(f"samples must be one-dimensional, got shape {values.shape}")
    return values


@dataclass(frozen=True)
class CcdfTable:
    """Empirical CCDF: p[k] = fraction of samples >= x[k], x ascending."""

    x: np.ndarray
    p: np.ndarray
    n_samples: int

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        p = np.asarray(self.p, dtype=float)
        if x.ndim != 1 or x.shape != p.shape or x.size == 0:
            raise ParameterError("x and p must be nonempty 1-d arrays of equal length")
        if np.any(np.diff(x) <= 0):
            raise ParameterError("x values must be strictly increasing")
        if np.any(p <= 0) or np.any(p > 1):
            raise ParameterError("p values must lie in (0, 1]")
        if np.any(np.diff(p) > 0):
            raise ParameterError("p must be non-increasing in x")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "p", p)

    @property
    def size(self) -> int:
        return self.x.size

    def cdf_at_points(self) -> np.ndarray:
        """Fraction of samples <= x[k]; complements p shifted one step."""
        return 1.0 - np.append(self.p[1:], 0.0)

    def quantile(self, level: float) -> float:
        """Smallest table value whose CDF reaches level."""
        if not 0 < level < 1:
            raise ParameterError(f"quantile level must lie in (0, 1), got {level}")
        idx = int(np.searchsorted(self.cdf_at_points(), level, side="left"))
        return float(self.x[min(idx, self.size - 1)])

    def log_interp(self, x_grid: np.ndarray) -> np.ndarray:
        """log10 p at the grid points, linear in (log10 x, log10 p).

        Rows at x <= 0 (a zero-count atom, typically) cannot appear on
        a log axis and are excluded, exactly as in the log-log export.
        """
        keep = self.x > 0
        if not keep.any():
            raise ParameterError("log-log interpolation requires positive support")
        return np.interp(np.log10(x_grid), np.log10(self.x[keep]), np.log10(self.p[keep]))


def ccdf(samples) -> CcdfTable:
    """Empirical CCDF table at the distinct sample values."""
    values = _values(samples)
    if values.size == 0:
        raise ParameterError("cannot build a CCDF from an empty sample")
    x, counts = np.unique(values, return_counts=True)
    p = counts[::-1].cumsum()[::-1] / values.size
    return CcdfTable(x=x, p=p, n_samples=values.size)


def save_ccdf(table: CcdfTable, path) -> None:
    """Two-column CSV, one row per distinct value."""
    with open(path, "w") as fh:
        fh.write("x,p\n")
        for x, p in zip(table.x, table.p):
            fh.write(f"{float(x)!r},{float(p)!r}\n")


def save_ccdf_loglog(table: CcdfTable, path) -> None:
    """Whitespace-separated log10 columns; rows with x <= 0 are dropped."""
    keep = table.x > 0
    with open(path, "w") as fh:
        fh.write("# log10_x log10_p\n")
        for x, p in zip(table.x[keep], table.p[keep]):
            fh.write(f"{math.log10(x)!r} {math.log10(p)!r}\n")


@dataclass(frozen=True)
class TailFit:
    """Hill/Newman fit of the CCDF index above x_min."""

    x_min: float
    alpha_ccdf: float
    n_tail: int
    stderr: float

    def __post_init__(self):
        if self.n_tail < 2:
            raise ParameterError(f"n_tail must be at least 2, got {self.n_tail}")
        if not self.alpha_ccdf > 0:
            raise ParameterError(f"alpha_ccdf must be positive, got {self.alpha_ccdf}")

    @property
    def density_exponent(self) -> float:
        return self.alpha_ccdf + 1.0


def fit_tail_mle(samples, x_min: float) -> TailFit:
    """MLE of the CCDF index over samples >= x_min.

    Samples equal to x_min count toward n_tail but contribute zero to
    the log-sum; at least two samples strictly above x_min are needed
    for a nondegenerate fit.
    """
    values = _values(samples)
    if not x_min > 0:
        raise ParameterError(f"x_min must be positive, got {x_min}")
    tail = values[values >= x_min]
    n_tail = int(tail.size)
    # too few points above threshold is a property of the data, not the call
    if np.count_nonzero(tail > x_min) < 2:
        raise DegenerateFitError(
            f"need at least 2 samples strictly above x_min={x_min} for a tail fit"
        )
    log_sum = float(np.log(tail / x_min).sum())
    alpha = n_tail / log_sum
    return TailFit(
        x_min=float(x_min),
        alpha_ccdf=alpha,
        n_tail=n_tail,
        stderr=alpha / math.sqrt(n_tail),
    )


def x_min_for_top_fraction(samples, fraction: float = DEFAULT_TOP_FRACTION) -> float:
    """Threshold at the k-th largest sample, k = ceil(fraction * n)."""
    values = _values(samples)
    if not 0 < fraction <= 1:
        raise ParameterError(f"fraction must lie in (0, 1], got {fraction}")
    if values.size == 0:
        raise ParameterError("cannot pick a threshold from an empty sample")
    k = max(1, int(math.ceil(fraction * values.size)))
    return float(np.sort(values)[values.size - k])


def fit_tail_fraction(samples, fraction: float = DEFAULT_TOP_FRACTION) -> TailFit:
    """Fit the tail above the top-fraction threshold (default top 10%)."""
    return fit_tail_mle(samples, x_min_for_top_fraction(samples, fraction))


def save_tail_fit(fit: TailFit, path) -> None:
    payload = {
        "x_min": fit.x_min,
        "alpha_ccdf": fit.alpha_ccdf,
        "n_tail": fit.n_tail,
        "stderr": fit.stderr,
        "density_exponent": fit.density_exponent,
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def log_ccdf_offset(a: CcdfTable, b: CcdfTable, quantile_band=DEFAULT_QUANTILE_BAND) -> float:
    """Mean vertical gap log10 p_a - log10 p_b over a shared tail band.

    The band is taken at the given quantile levels of the heavier
    table (the one reaching further at the band's upper level) and
    intersected with both supports; the gap is averaged over a
    log-spaced grid with linear interpolation in log-log coordinates.
    """
    lo, hi = quantile_band
    if not (0 < lo < hi < 1):
        raise ParameterError(f"quantile band must satisfy 0 < lo < hi < 1, got {quantile_band}")
    heavy = a if a.quantile(hi) >= b.quantile(hi) else b
    x_lo = max(heavy.quantile(lo), float(a.x[0]), float(b.x[0]))
    x_hi = min(heavy.quantile(hi), float(a.x[-1]), float(b.x[-1]))
    if not x_lo < x_hi:
        raise ParameterError(
            f"CCDF supports do not overlap inside the quantile band {quantile_band}"
        )
    if x_lo <= 0:
        raise ParameterError("log offset band requires positive support")
    grid = np.geomspace(x_lo, x_hi, 50)
    return float(np.mean(a.log_interp(grid) - b.log_interp(grid)))
