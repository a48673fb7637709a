"""Heavy-tailed interval T and the Poisson-mixed in-degree N(T).

The in-degree of a page is modeled as N(T), the number of points a
unit-rate Poisson process drops on an interval of random length T,
where T is regularly varying with CCDF index alpha > 1. Mixing over T
preserves both the mean (E N(T) = E T) and the tail index, which is
what makes the model's in-degree calibration work.

The default T family is Pareto: CCDF (x/m)^(-alpha) for x >= m, which
realizes the asymptotic tail exactly at all scales. A log-corrected
family with CCDF (x/m)^(-alpha) * (1 + ln(x/m)) is provided to
exercise non-constant slowly varying factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import lambertw

from .errors import ParameterError
from .rng import check_seed, stream
from .samples import SampleSet

# stream tags under a caller's master seed; sample_t and
# InDegreeModel.sample share _TAG_T so that, given the same seed, the
# in-degree draws are Poisson counts over the very same T draws
_TAG_T = 1
_TAG_MIX = 2

SLOWLY_VARYING_CHOICES = ("constant", "logarithmic")


def pareto_scale_for_mean(alpha: float, d: float) -> float:
    """Scale m such that Pareto(alpha, m) has mean d: m = d(alpha-1)/alpha."""
    if not alpha > 1:
        raise ParameterError(f"alpha must exceed 1 for a finite mean, got {alpha}")
    if not d > 0:
        raise ParameterError(f"mean must be positive, got {d}")
    return d * (alpha - 1.0) / alpha


@dataclass(frozen=True)
class TailSpec:
    """Regularly varying law for T with CCDF x^(-alpha) * L(x)."""

    alpha: float
    x_scale: float
    slowly_varying: str = "constant"

    def __post_init__(self):
        if not self.alpha > 1:
            raise ParameterError(f"alpha must exceed 1, got {self.alpha}")
        if not self.x_scale > 0:
            raise ParameterError(f"x_scale must be positive, got {self.x_scale}")
        if self.slowly_varying not in SLOWLY_VARYING_CHOICES:
            raise ParameterError(
                f"slowly_varying must be one of {SLOWLY_VARYING_CHOICES}, got {self.slowly_varying!r}"
            )

    def mean(self) -> float:
        lam = self.alpha - 1.0
        if self.slowly_varying == "constant":
            return self.x_scale * self.alpha / lam
        return self.x_scale * (1.0 + 1.0 / lam + 1.0 / lam**2)

    def ccdf(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        ratio = np.maximum(x / self.x_scale, 1.0)
        p = ratio**-self.alpha
        if self.slowly_varying == "logarithmic":
            p = p * (1.0 + np.log(ratio))
        return p

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """n draws by CCDF inversion of a uniform in (0, 1]."""
        u = 1.0 - rng.random(n)
        if self.slowly_varying == "constant":
            return self.x_scale * u ** (-1.0 / self.alpha)
        # solve exp(-alpha*y) * (1+y) = u for y = ln(x/m) >= 0 via the
        # lower Lambert branch; z = 1+y satisfies z*exp(-alpha*z) = u*exp(-alpha)
        a = self.alpha
        w = lambertw(-a * u * np.exp(-a), k=-1).real
        z = -w / a
        return self.x_scale * np.exp(z - 1.0)


def tail_spec_for_mean(alpha: float, d: float, slowly_varying: str = "constant") -> TailSpec:
    """TailSpec of the requested family calibrated so that E T = d."""
    if slowly_varying == "constant":
        return TailSpec(alpha=alpha, x_scale=pareto_scale_for_mean(alpha, d))
    if slowly_varying == "logarithmic":
        if not alpha > 1:
            raise ParameterError(f"alpha must exceed 1, got {alpha}")
        if not d > 0:
            raise ParameterError(f"mean must be positive, got {d}")
        lam = alpha - 1.0
        return TailSpec(
            alpha=alpha,
            x_scale=d / (1.0 + 1.0 / lam + 1.0 / lam**2),
            slowly_varying="logarithmic",
        )
    raise ParameterError(f"slowly_varying must be one of {SLOWLY_VARYING_CHOICES}, got {slowly_varying!r}")


@dataclass(frozen=True)
class InDegreeModel:
    """In-degree N(T): unit-rate Poisson count over a draw of T."""

    tail: TailSpec

    def sample(self, n: int, seed: int) -> np.ndarray:
        t = self.tail.sample(n, stream(seed, _TAG_T))
        return stream(seed, _TAG_MIX).poisson(t)


@dataclass(frozen=True)
class PoissonInDegree:
    """Degenerate-T in-degree: N ~ Poisson(rate) with fixed rate."""

    rate: float

    def __post_init__(self):
        if not self.rate >= 0:
            raise ParameterError(f"rate must be nonnegative, got {self.rate}")

    def sample(self, n: int, seed: int) -> np.ndarray:
        return stream(seed, _TAG_MIX).poisson(self.rate, n)


@dataclass(frozen=True)
class ConstantInDegree:
    """Deterministic in-degree: N identically equal to count."""

    count: int

    def __post_init__(self):
        if self.count < 0:
            raise ParameterError(f"count must be nonnegative, got {self.count}")

    def sample(self, n: int, seed: int) -> np.ndarray:
        check_seed(seed)
        return np.full(n, self.count, dtype=np.int64)


def sample_t(spec: TailSpec, n: int, seed: int) -> SampleSet:
    """n i.i.d. draws of T, deterministic given seed."""
    if n < 1:
        raise ParameterError(f"n must be at least 1, got {n}")
    values = spec.sample(n, stream(seed, _TAG_T))
    return SampleSet(
        values=values,
        source="t",
        seed=check_seed(seed),
        meta={
            "alpha": spec.alpha,
            "x_scale": spec.x_scale,
            "slowly_varying": spec.slowly_varying,
        },
    )


def sample_in_degree(model, n: int, seed: int) -> SampleSet:
    """n i.i.d. draws of the in-degree under any degree model."""
    if n < 1:
        raise ParameterError(f"n must be at least 1, got {n}")
    values = model.sample(n, seed)
    meta: dict = {"model": type(model).__name__}
    tail = getattr(model, "tail", None)
    if tail is not None:
        meta.update(alpha=tail.alpha, x_scale=tail.x_scale, slowly_varying=tail.slowly_varying)
    return SampleSet(values=values, source="in-degree", seed=check_seed(seed), meta=meta)
