"""Sparse directed graphs and PageRank power iteration.

PageRank is computed in the mean-1 scaling

    PR(i) = c * sum_{j -> i} PR(j)/d_j + (1 - c)

so values are directly comparable with the rank variable R of the
fixed-point module. Dangling nodes (out-degree 0) redistribute their
mass uniformly by default, which keeps sum(PR) = n exactly; the
"drop" policy discards it instead and the mean-1 invariant is
relaxed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import accel
from .errors import ParameterError, ParseError
from .samples import SampleSet

DANGLING_POLICIES = ("redistribute", "drop")
DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 1000


@dataclass(frozen=True)
class DirectedGraph:
    """Edge arrays sorted by (src, dst); node ids are dense [0, n)."""

    n: int
    src: np.ndarray
    dst: np.ndarray
    original_ids: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"graph must have at least one node, got n={self.n}")
        src = np.asarray(self.src, dtype=np.int64)
        dst = np.asarray(self.dst, dtype=np.int64)
        if src.shape != dst.shape or src.ndim != 1:
            raise ParameterError("src and dst must be 1-d arrays of equal length")
        if src.size and (src.min() < 0 or src.max() >= self.n or dst.min() < 0 or dst.max() >= self.n):
            raise ParameterError("edge endpoints must lie in [0, n)")
        original = np.asarray(self.original_ids, dtype=np.int64)
        if original.shape != (self.n,):
            raise ParameterError("original_ids must map every dense id")
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "dst", dst)
        object.__setattr__(self, "original_ids", original)

    @property
    def m(self) -> int:
        """Edge count."""
        return self.src.size

    @cached_property
    def out_degree(self) -> np.ndarray:
        return np.bincount(self.src, minlength=self.n)

    @cached_property
    def in_degree(self) -> np.ndarray:
        return np.bincount(self.dst, minlength=self.n)


def from_edges(src, dst, n: int | None = None, original_ids=None) -> DirectedGraph:
    """Graph from parallel endpoint arrays with dense ids."""
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    if src.size == 0:
        raise ParameterError("graph must have at least one edge")
    if n is None:
        n = int(max(src.max(), dst.max())) + 1
    order = np.lexsort((dst, src))
    if original_ids is None:
        original_ids = np.arange(n, dtype=np.int64)
    return DirectedGraph(n=n, src=src[order], dst=dst[order], original_ids=original_ids)


def parse_edge_list(lines, keep_duplicates: bool = False) -> DirectedGraph:
    """Graph from "src dst" text; '#' lines are comments.

    Node ids may be arbitrary nonnegative integers; they are remapped
    to dense [0, n) in ascending order with the mapping kept on the
    graph. Duplicate edges collapse unless keep_duplicates is set.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    raw_src, raw_dst = [], []
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'src dst', got {stripped!r}", line_number=number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer node id in {stripped!r}", line_number=number) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative node id in {stripped!r}", line_number=number)
        raw_src.append(u)
        raw_dst.append(v)
    if not raw_src:
        raise ParameterError("edge list contains no edges")
    raw_src = np.asarray(raw_src, dtype=np.int64)
    raw_dst = np.asarray(raw_dst, dtype=np.int64)
    original_ids = np.unique(np.concatenate([raw_src, raw_dst]))
    src = np.searchsorted(original_ids, raw_src)
    dst = np.searchsorted(original_ids, raw_dst)
    n = original_ids.size
    if not keep_duplicates:
        keys = np.unique(src * np.int64(n) + dst)
        src, dst = keys // n, keys % n
    return from_edges(src, dst, n=n, original_ids=original_ids)


def load_edge_list(path, keep_duplicates: bool = False) -> DirectedGraph:
    with open(path) as fh:
        return parse_edge_list(fh, keep_duplicates=keep_duplicates)


def write_edge_list(g: DirectedGraph, path) -> None:
    """Edge lines under original ids; parse_edge_list round-trips it."""
    with open(path, "w") as fh:
        fh.write(f"# directed edge list: {g.n} nodes, {g.m} edges\n")
        ids = g.original_ids
        for u, v in zip(g.src, g.dst):
            fh.write(f"{ids[u]} {ids[v]}\n")


@dataclass(frozen=True)
class PageRankVector:
    """Power-iteration output in the mean-1 scaling."""

    values: np.ndarray
    c: float
    iterations: int
    residual: float
    converged: bool


def pagerank(
    g: DirectedGraph,
    c: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    dangling: str = "redistribute",
) -> PageRankVector:
    """Power iteration from PR = 1; stops when the total L1 change is
    at most tol * n (tol is a per-node tolerance)."""
    if not 0 < c < 1:
        raise ParameterError(f"c must lie in (0, 1), got {c}")
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ParameterError(f"max_iter must be at least 1, got {max_iter}")
    if dangling not in DANGLING_POLICIES:
        raise ParameterError(f"dangling must be one of {DANGLING_POLICIES}, got {dangling!r}")
    n = g.n
    out_degree = g.out_degree
    inv_out = np.zeros(n)
    linked = out_degree > 0
    inv_out[linked] = 1.0 / out_degree[linked]
    dangling_idx = np.flatnonzero(~linked)
    pr = np.ones(n)
    iterations = 0
    residual = np.inf
    converged = False
    while iterations < max_iter:
        iterations += 1
        nxt = c * accel.edge_push(g.src, g.dst, pr * inv_out, n) + (1.0 - c)
        if dangling == "redistribute" and dangling_idx.size:
            nxt += c * pr[dangling_idx].sum() / n
        residual = float(np.abs(nxt - pr).sum())
        pr = nxt
        if residual <= tol * n:
            converged = True
            break
    return PageRankVector(
        values=pr, c=c, iterations=iterations, residual=residual, converged=converged
    )


def save_pagerank(pv: PageRankVector, g: DirectedGraph, path) -> None:
    """"node value" lines under original ids, with a run-metadata header."""
    with open(path, "w") as fh:
        fh.write(f"# c: {pv.c!r}\n")
        fh.write(f"# iterations: {pv.iterations}\n")
        fh.write(f"# residual: {pv.residual!r}\n")
        fh.write(f"# converged: {'true' if pv.converged else 'false'}\n")
        for node, value in zip(g.original_ids, pv.values):
            fh.write(f"{node} {float(value)!r}\n")


def degree_histograms(g: DirectedGraph) -> tuple[SampleSet, SampleSet]:
    """Per-node (in, out) degree SampleSets."""
    meta = {"nodes": g.n, "edges": g.m, "mean_out_degree": float(g.out_degree.mean())}
    in_set = SampleSet(values=g.in_degree, source="graph-in-degree", seed=None, meta=meta)
    out_set = SampleSet(values=g.out_degree, source="graph-out-degree", seed=None, meta=meta)
    return in_set, out_set
