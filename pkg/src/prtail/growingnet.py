"""Growing directed network: preferential attachment mixed with
uniform attachment.

Starting from d isolated nodes, each new node links to d distinct
existing nodes; every link picks its target uniformly with
probability beta and in proportion to current in-degree otherwise.
Mixing in uniform choices lightens the in-degree tail, so beta tunes
the power-law exponent. The first d nodes are wired at the end so
that every node leaves with out-degree exactly d.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import accel
from .errors import ParameterError
from .graph import DirectedGraph, from_edges
from .rng import check_seed, kernel_seed

_TAG_GROWTH = 5


@dataclass(frozen=True)
class GrowthParams:
    beta: float
    d: int
    n_final: int
    seed: int

    def __post_init__(self):
        if not 0 <= self.beta <= 1:
            raise ParameterError(f"beta must lie in [0, 1], got {self.beta}")
        if not isinstance(self.d, (int, np.integer)) or isinstance(self.d, bool) or self.d < 1:
            raise ParameterError(f"d must be a positive integer, got {self.d!r}")
        if self.n_final <= self.d:
            raise ParameterError(
                f"n_final must exceed d, got n_final={self.n_final} with d={self.d}"
            )
        check_seed(self.seed)


def generate(params: GrowthParams) -> DirectedGraph:
    """Grow the network; deterministic given params.seed.

    Every node has out-degree exactly d, no self-loops, and distinct
    targets within each node's d links.
    """
    src, dst = accel.gn_links(
        params.n_final,
        params.d,
        float(params.beta),
        kernel_seed(params.seed, _TAG_GROWTH),
    )
    return from_edges(src, dst, n=params.n_final)


def attachment_probabilities(in_degrees, beta: float) -> np.ndarray:
    """Per-node target law of a single new link: beta/n uniform mass
    plus (1-beta) proportional to in-degree, uniform while all
    in-degrees are zero."""
    degrees = np.asarray(in_degrees, dtype=float)
    if degrees.ndim != 1 or degrees.size == 0:
        raise ParameterError("in_degrees must be a nonempty 1-d array")
    if np.any(degrees < 0):
        raise ParameterError("in_degrees must be nonnegative")
    if not 0 <= beta <= 1:
        raise ParameterError(f"beta must lie in [0, 1], got {beta}")
    n = degrees.size
    total = degrees.sum()
    preferential = degrees / total if total > 0 else np.full(n, 1.0 / n)
    return beta / n + (1.0 - beta) * preferential
