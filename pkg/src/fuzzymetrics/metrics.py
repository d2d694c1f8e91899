"""Hausdorff distance on cuts, the supremum metric, and level convergence.

The supremum metric between fuzzy numbers is the sup over levels of the
Hausdorff distance between matching cuts.  On sampled data the sup is a
finite max over grid nodes; on parametric curves it is bracketed by an
adaptive branch-and-bound search whose range bounds come from the declared
endpoint monotonicity.  Declared jump points are never straddled: they are
forced split points whose one-sided limit cuts enter as explicit supremum
candidates, so a sup that is approached (but not attained) at a jump is
still enclosed exactly.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .core import (
    AlphaGrid,
    CutCurve1D,
    FuzzyNumber1D,
    GridLike,
    Interval,
    SampledFuzzy1D,
    as_curve,
    as_grid,
    cut_endpoints,
    refine_to_grid,
)
from .bodies import PlanarSupport
from .errors import GridMismatch, OutOfRange

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_MAX_DEPTH",
    "Enclosure",
    "hausdorff_interval",
    "hausdorff_support_2d",
    "LevelProfile",
    "level_distance_profile",
    "d_infty_sampled",
    "d_infty_parametric",
    "ConvergenceEntry",
    "ConvergenceReport",
    "level_convergence_report",
    "default_report_grid",
    "is_counterexample_object",
]

DEFAULT_TOL = 1e-9
DEFAULT_MAX_DEPTH = 60
DEFAULT_MAX_NODES = 200_000
# level-convergence reports keep the full distance traces only for short scans
TRACE_WINDOW_CAP = 1024


def hausdorff_interval(i: Interval, j: Interval) -> float:
    """Hausdorff distance between closed intervals: the larger endpoint gap."""
    return max(abs(i.lo - j.lo), abs(i.hi - j.hi))


def hausdorff_support_2d(a: PlanarSupport, b: PlanarSupport) -> float:
    """Max absolute support difference over the shared direction grid.

    For compact convex sets this equals the Hausdorff distance; sampled on
    finitely many directions it is a lower bound, exact whenever both
    normal fans are resolved by the grid.
    """
    if a.directions != b.directions:
        raise GridMismatch(f"direction grids differ: {a.directions} vs {b.directions}")
    return float(np.max(np.abs(a.values - b.values)))


@dataclass(frozen=True)
class LevelProfile:
    """Per-level Hausdorff distances between the cuts of one pair."""

    alphas: np.ndarray
    h: np.ndarray

    def __iter__(self):
        return iter(zip(self.alphas.tolist(), self.h.tolist()))

    def __len__(self) -> int:
        return int(self.alphas.size)

    def max(self) -> float:
        return float(np.max(self.h))


def level_distance_profile(u: FuzzyNumber1D, v: FuzzyNumber1D, grid: GridLike) -> LevelProfile:
    """H(cut(u, a), cut(v, a)) at every grid level."""
    g = as_grid(grid)
    lo_u, hi_u = cut_endpoints(u, g.levels)
    lo_v, hi_v = cut_endpoints(v, g.levels)
    h = np.maximum(np.abs(lo_u - lo_v), np.abs(hi_u - hi_v))
    return LevelProfile(g.levels, h)


def d_infty_sampled(u: SampledFuzzy1D, v: SampledFuzzy1D) -> float:
    """Exact supremum metric between sampled numbers.

    Endpoint differences are piecewise linear in alpha, so the sup over
    [0, 1] is attained at a node of the union grid.
    """
    if u.grid != v.grid:
        g = u.grid.union(v.grid)
        u = refine_to_grid(u, g)
        v = refine_to_grid(v, g)
    return float(
        np.max(np.maximum(np.abs(u.lower - v.lower), np.abs(u.upper - v.upper)))
    )


@dataclass(frozen=True)
class Enclosure:
    """Certified bracket [lower, upper] for a supremum-valued quantity.

    ``attained`` records whether the best known candidate is an actual
    evaluation point (True) or a one-sided limit at a declared jump that the
    supremum only approaches (False).  ``witness_alpha`` is where that
    candidate lives; ``nodes`` counts branch-and-bound segment expansions.
    """

    lower: float
    upper: float
    attained: bool
    witness_alpha: float | None = None
    nodes: int = 0

    def __post_init__(self):
        if self.lower > self.upper:
            raise OutOfRange(f"enclosure lower {self.lower} > upper {self.upper}")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "attained": self.attained}


def _pair_h(cut_u: tuple[float, float], cut_v: tuple[float, float]) -> float:
    return max(abs(cut_u[0] - cut_v[0]), abs(cut_u[1] - cut_v[1]))


def _segment_bound(
    left_u: tuple[float, float],
    left_v: tuple[float, float],
    right_u: tuple[float, float],
    right_v: tuple[float, float],
) -> float:
    """Upper bound for sup H over a segment, from monotone endpoint ranges.

    On [a, b] the lower endpoints range over [lower(a), lower(b)] and the
    upper endpoints over [upper(b), upper(a)]; the sup of |x - y| over two
    intervals is max(x_max - y_min, y_max - x_min).
    """
    bound_lo = max(right_u[0] - left_v[0], right_v[0] - left_u[0])
    bound_hi = max(left_u[1] - right_v[1], left_v[1] - right_u[1])
    return max(bound_lo, bound_hi, 0.0)


def _point_evaluator(curve: CutCurve1D):
    """Scalar (lower, upper) evaluator avoiding per-call array wrapping."""
    lf, uf = curve.lower_fn, curve.upper_fn

    def ev(x: float) -> tuple[float, float]:
        try:
            return float(lf(x)), float(uf(x))
        except (TypeError, ValueError):
            lo, hi = curve.endpoints(np.asarray(x, dtype=float))
            return float(lo), float(hi)

    return ev


def d_infty_parametric(
    u: FuzzyNumber1D,
    v: FuzzyNumber1D,
    tol: float = DEFAULT_TOL,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> Enclosure:
    """Certified enclosure of the supremum metric between cut curves.

    Branch and bound on the level axis: each segment's sup is bounded above
    through the declared endpoint monotonicity, declared jumps force split
    points whose right-limit cuts are evaluated as explicit candidates, and
    segments are bisected until the bracket is narrower than ``tol``.  When
    ``max_depth`` or ``max_nodes`` stops refinement first, the bracket is
    still certified, just wider than requested.
    """
    if not tol > 0:
        raise OutOfRange("tol must be positive")
    cu, cv = as_curve(u), as_curve(v)
    if not (cu.lower_nondecreasing and cu.upper_nonincreasing):
        raise OutOfRange("parametric supremum needs declared endpoint monotonicity")
    if not (cv.lower_nondecreasing and cv.upper_nonincreasing):
        raise OutOfRange("parametric supremum needs declared endpoint monotonicity")
    if cu is cv or (cu.key is not None and cu.key == cv.key):
        return Enclosure(0.0, 0.0, attained=True, witness_alpha=0.0)

    jump_levels = sorted(
        {j.alpha for j in cu.jumps if j.alpha < 1.0}
        | {j.alpha for j in cv.jumps if j.alpha < 1.0}
    )
    points = sorted({0.0, 1.0, *jump_levels})
    eval_u = _point_evaluator(cu)
    eval_v = _point_evaluator(cv)

    best_point = -1.0
    best_point_at = 0.0
    best_limit = -1.0
    best_limit_at = 0.0

    cuts = {x: (eval_u(x), eval_v(x)) for x in points}
    for x, (a_, b_) in cuts.items():
        h = _pair_h(a_, b_)
        if h > best_point:
            best_point, best_point_at = h, x

    heap: list[tuple] = []
    counter = 0
    for left, right in zip(points[:-1], points[1:]):
        if left in jump_levels:
            rl_u, rl_v = cu.right_limit(left), cv.right_limit(left)
            lu = (rl_u.lo, rl_u.hi)
            lv = (rl_v.lo, rl_v.hi)
            h = _pair_h(lu, lv)
            if h > best_limit:
                best_limit, best_limit_at = h, left
        else:
            lu, lv = cuts[left]
        ru, rv = cuts[right]
        bound = _segment_bound(lu, lv, ru, rv)
        heapq.heappush(heap, (-bound, counter, left, right, lu, lv, ru, rv, 0))
        counter += 1

    frozen = 0.0
    nodes = 0
    while heap:
        lower = max(best_point, best_limit, 0.0)
        top = -heap[0][0]
        if max(top, frozen) - lower <= tol or nodes >= max_nodes:
            break
        neg_bound, _, a, b, lu, lv, ru, rv, depth = heapq.heappop(heap)
        bound = -neg_bound
        if bound <= lower:
            continue
        if depth >= max_depth:
            frozen = max(frozen, bound)
            continue
        nodes += 1
        m = 0.5 * (a + b)
        mu, mv = eval_u(m), eval_v(m)
        h = _pair_h(mu, mv)
        if h > best_point:
            best_point, best_point_at = h, m
        lower = max(best_point, best_limit, 0.0)
        for seg in ((a, m, lu, lv, mu, mv), (m, b, mu, mv, ru, rv)):
            child = _segment_bound(seg[2], seg[3], seg[4], seg[5])
            if child > lower:
                heapq.heappush(heap, (-child, counter, *seg, depth + 1))
                counter += 1

    lower = max(best_point, best_limit, 0.0)
    upper = max(lower, frozen, -heap[0][0] if heap else 0.0)
    attained = best_point >= best_limit
    witness = best_point_at if attained else best_limit_at
    return Enclosure(lower, upper, attained=attained, witness_alpha=witness, nodes=nodes)


@dataclass(frozen=True)
class ConvergenceEntry:
    """Per-level outcome of a level-convergence scan."""

    alpha: float
    first_index: int | None
    reached: bool
    h_last: float
    h_values: tuple[float, ...] | None = None

    def to_dict(self) -> dict:
        d: dict = {
            "alpha": self.alpha,
            "first_index": self.first_index,
            "reached": self.reached,
            "h_last": self.h_last,
        }
        if self.h_values is not None:
            d["h_values"] = list(self.h_values)
        return d


@dataclass(frozen=True)
class ConvergenceReport:
    """Levelwise convergence verdict for a sequence against a limit."""

    entries: tuple[ConvergenceEntry, ...]
    eps: float
    n_max: int
    converged: bool
    failing_alphas: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "eps": self.eps,
            "n_max": self.n_max,
            "converged": self.converged,
            "failing_alphas": list(self.failing_alphas),
            "entries": [e.to_dict() for e in self.entries],
        }


SequenceLike = Union[Sequence[FuzzyNumber1D], Callable[[int], FuzzyNumber1D]]


def level_convergence_report(
    seq: SequenceLike,
    u: FuzzyNumber1D,
    grid: GridLike,
    eps: float,
    n_max: int,
) -> ConvergenceReport:
    """Scan a sequence for levelwise Hausdorff convergence to ``u``.

    ``seq`` is a finite sequence or a 1-based index -> member callable.  At
    each grid level the report records the first index N after which every
    scanned distance stays within ``eps``; "not reached" means the last
    scanned index still violates.  No claim is made beyond the window.
    """
    if not eps > 0:
        raise OutOfRange("eps must be positive")
    if n_max < 1:
        raise OutOfRange("n_max must be at least 1")
    if callable(seq):
        member = seq
    else:
        n_max = min(n_max, len(seq))
        member = lambda k: seq[k - 1]

    g = as_grid(grid)
    alphas = g.levels
    lo_u, hi_u = cut_endpoints(u, alphas)
    last_violation = np.zeros(alphas.size, dtype=np.int64)
    keep_trace = n_max <= TRACE_WINDOW_CAP
    trace = np.empty((n_max, alphas.size)) if keep_trace else None
    h = np.zeros(alphas.size)
    for n in range(1, n_max + 1):
        lo, hi = cut_endpoints(member(n), alphas)
        h = np.maximum(np.abs(lo - lo_u), np.abs(hi - hi_u))
        last_violation[h > eps] = n
        if keep_trace:
            trace[n - 1] = h

    entries = []
    failing = []
    for i, a in enumerate(alphas.tolist()):
        lv = int(last_violation[i])
        reached = lv < n_max
        first = (lv + 1) if reached else None
        if not reached:
            failing.append(a)
        entries.append(
            ConvergenceEntry(
                alpha=a,
                first_index=first,
                reached=reached,
                h_last=float(h[i]),
                h_values=tuple(trace[:, i].tolist()) if keep_trace else None,
            )
        )
    return ConvergenceReport(
        entries=tuple(entries),
        eps=eps,
        n_max=n_max,
        converged=not failing,
        failing_alphas=tuple(failing),
    )


def is_counterexample_object(u) -> bool:
    """True for fuzzy numbers built by the counterexample constructors."""
    key = getattr(u, "key", None)
    return isinstance(key, tuple) and bool(key) and str(key[0]).startswith("counterexample")


def default_report_grid(counterexample_aware: bool = False, base_count: int = 101) -> AlphaGrid:
    """Uniform report grid, densified around the one-third level for
    counterexample runs (where the interesting behavior concentrates)."""
    levels = np.linspace(0.0, 1.0, base_count)
    if counterexample_aware:
        offsets = 10.0 ** -np.arange(2, 7)
        extra = np.concatenate([1.0 / 3.0 + offsets, 1.0 / 3.0 - offsets, [1.0 / 3.0]])
        levels = np.union1d(levels, extra[(extra > 0.0) & (extra < 1.0)])
    return AlphaGrid(levels)
