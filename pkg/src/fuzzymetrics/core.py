"""Cut-based representations of 1-D fuzzy numbers and their validation.

A fuzzy number is stored through its alpha-cuts: a nested family of closed
intervals indexed by membership level alpha in [0, 1].  Two carriers are
provided: ``SampledFuzzy1D`` holds endpoint samples on a finite grid
(piecewise-linear in between), ``CutCurve1D`` holds closed-form endpoint
callables plus metadata about monotonicity and declared jump points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

from .errors import BadGrid, EmptyCut, NonNested, OutOfRange

__all__ = [
    "AlphaGrid",
    "Interval",
    "SampledFuzzy1D",
    "DeclaredJump",
    "CutCurve1D",
    "FuzzyNumber1D",
    "as_grid",
    "make_sampled_1d",
    "alpha_cut",
    "cut_endpoints",
    "membership_at",
    "as_curve",
    "sample_curve",
    "refine_to_grid",
    "ValidationCheck",
    "ValidationReport",
    "validate_representation",
]

# One-sided limit probes: offsets 2**-k, k = PROBE_K_MIN..PROBE_K_MAX.
PROBE_K_MIN = 4
PROBE_K_MAX = 30
DEFAULT_VALIDATION_TOL = 1e-9


@dataclass(frozen=True)
class AlphaGrid:
    """Strictly increasing membership levels spanning [0, 1] inclusively."""

    levels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.levels, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise BadGrid("grid needs at least the two endpoint levels 0 and 1")
        if not np.all(np.isfinite(arr)):
            raise BadGrid("grid levels must be finite")
        if arr[0] != 0.0 or arr[-1] != 1.0:
            raise BadGrid("grid must start at 0 and end at 1")
        if not np.all(np.diff(arr) > 0):
            raise BadGrid("grid levels must be strictly increasing")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "levels", arr)

    @staticmethod
    def uniform(count: int) -> "AlphaGrid":
        if count < 2:
            raise BadGrid("uniform grid needs at least 2 levels")
        return AlphaGrid(np.linspace(0.0, 1.0, count))

    def union(self, other: "AlphaGrid") -> "AlphaGrid":
        merged = np.union1d(self.levels, other.levels)
        return AlphaGrid(merged)

    def __len__(self) -> int:
        return int(self.levels.size)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlphaGrid) and np.array_equal(self.levels, other.levels)


GridLike = Union[AlphaGrid, Sequence[float], np.ndarray]


def as_grid(grid: GridLike) -> AlphaGrid:
    """Coerce an array-like of levels into a validated AlphaGrid."""
    if isinstance(grid, AlphaGrid):
        return grid
    return AlphaGrid(np.asarray(grid, dtype=float))


@dataclass(frozen=True)
class Interval:
    """Closed bounded interval [lo, hi]; singletons have lo == hi."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (self.lo <= self.hi):
            raise EmptyCut(f"empty interval: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class SampledFuzzy1D:
    """Endpoint samples of the cuts on a grid, linear in alpha in between.

    Built through :func:`make_sampled_1d`, which enforces nestedness and
    nonemptiness; direct construction assumes already-valid data.
    """

    grid: AlphaGrid
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lower, dtype=float).copy()
        hi = np.asarray(self.upper, dtype=float).copy()
        lo.flags.writeable = False
        hi.flags.writeable = False
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    def endpoints(self, alphas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Cut endpoints at each alpha (vectorized, exact at grid nodes)."""
        a = np.asarray(alphas, dtype=float)
        lo = np.interp(a, self.grid.levels, self.lower)
        hi = np.interp(a, self.grid.levels, self.upper)
        return lo, hi

    @property
    def support(self) -> Interval:
        return Interval(float(self.lower[0]), float(self.upper[0]))


@dataclass(frozen=True)
class DeclaredJump:
    """A declared right-side discontinuity of the cut curve at ``alpha``.

    ``lower_right`` / ``upper_right`` are the exact one-sided limits of the
    endpoints as the level decreases to ``alpha`` from above.  Valid fuzzy
    numbers are left-continuous, so the value at ``alpha`` itself is always
    the left limit and needs no declaration.
    """

    alpha: float
    lower_right: float
    upper_right: float


@dataclass(frozen=True)
class CutCurve1D:
    """Parametric fuzzy number: endpoint evaluators on [0, 1] plus metadata.

    ``lower_fn`` must be nondecreasing and ``upper_fn`` nonincreasing (the
    declared monotonicity is what certifies range bounds in the adaptive
    supremum search).  All genuine discontinuities must be declared; the
    callables should accept numpy arrays, scalar-only callables are wrapped
    on demand.
    """

    lower_fn: Callable[[np.ndarray], np.ndarray]
    upper_fn: Callable[[np.ndarray], np.ndarray]
    jumps: tuple[DeclaredJump, ...] = ()
    lower_nondecreasing: bool = True
    upper_nonincreasing: bool = True
    key: tuple | None = field(default=None, compare=False)

    def endpoints(self, alphas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        a = np.asarray(alphas, dtype=float)
        try:
            lo = np.asarray(self.lower_fn(a), dtype=float)
            hi = np.asarray(self.upper_fn(a), dtype=float)
            if lo.shape != a.shape or hi.shape != a.shape:
                raise TypeError
        except TypeError:
            lo = np.array([float(self.lower_fn(x)) for x in np.atleast_1d(a)])
            hi = np.array([float(self.upper_fn(x)) for x in np.atleast_1d(a)])
            lo = lo.reshape(a.shape)
            hi = hi.reshape(a.shape)
        return lo, hi

    def jump_at(self, alpha: float) -> DeclaredJump | None:
        for j in self.jumps:
            if j.alpha == alpha:
                return j
        return None

    def right_limit(self, alpha: float) -> Interval:
        """Cut limit as the level decreases to ``alpha`` from above."""
        j = self.jump_at(alpha)
        if j is not None:
            return Interval(j.lower_right, j.upper_right)
        return alpha_cut(self, alpha)


FuzzyNumber1D = Union[SampledFuzzy1D, CutCurve1D]


def make_sampled_1d(grid: GridLike, lower: Sequence[float], upper: Sequence[float]) -> SampledFuzzy1D:
    """Build a validated sampled fuzzy number from endpoint samples."""
    g = as_grid(grid)
    lo = np.asarray(lower, dtype=float)
    hi = np.asarray(upper, dtype=float)
    if lo.shape != (len(g),) or hi.shape != (len(g),):
        raise ValueError(f"endpoint sequences must match the grid length {len(g)}")
    if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        raise ValueError("endpoint samples must be finite")
    bad = np.nonzero(lo > hi)[0]
    if bad.size:
        i = int(bad[0])
        raise EmptyCut(f"empty cut at alpha={g.levels[i]}: lower {lo[i]} > upper {hi[i]}")
    if np.any(np.diff(lo) < 0):
        raise NonNested("lower endpoints must be nondecreasing in alpha")
    if np.any(np.diff(hi) > 0):
        raise NonNested("upper endpoints must be nonincreasing in alpha")
    return SampledFuzzy1D(g, lo, hi)


def _check_level(alpha: float) -> float:
    a = float(alpha)
    if not (0.0 <= a <= 1.0) or math.isnan(a):
        raise OutOfRange(f"alpha={alpha} outside [0, 1]")
    return a


def alpha_cut(u: FuzzyNumber1D, alpha: float) -> Interval:
    """The cut of ``u`` at level ``alpha``.

    Sampled numbers interpolate endpoints linearly between grid nodes and
    return stored samples exactly at the nodes; parametric numbers evaluate
    their endpoint callables.
    """
    a = _check_level(alpha)
    if isinstance(u, SampledFuzzy1D):
        levels = u.grid.levels
        i = int(np.searchsorted(levels, a))
        if i < levels.size and levels[i] == a:
            return Interval(float(u.lower[i]), float(u.upper[i]))
        lo0, lo1 = u.lower[i - 1], u.lower[i]
        hi0, hi1 = u.upper[i - 1], u.upper[i]
        t = (a - levels[i - 1]) / (levels[i] - levels[i - 1])
        return Interval(float(lo0 + t * (lo1 - lo0)), float(hi0 + t * (hi1 - hi0)))
    lo, hi = u.endpoints(np.asarray(a))
    return Interval(float(lo), float(hi))


def cut_endpoints(u: FuzzyNumber1D, alphas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized cut endpoints at each level in ``alphas``."""
    return u.endpoints(np.asarray(alphas, dtype=float))


def _crossing_level(levels: np.ndarray, values: np.ndarray, x: float, increasing: bool) -> float:
    """Largest alpha at which a monotone piecewise-linear endpoint still
    admits ``x`` on the inner side; 1.0 if it never crosses."""
    if increasing:
        admits = values <= x
    else:
        admits = values >= x
    if admits[-1]:
        return 1.0
    # last node that still admits x; the crossing lies in the next segment
    j = int(np.nonzero(admits)[0][-1])
    v0, v1 = values[j], values[j + 1]
    t = (x - v0) / (v1 - v0)
    return float(levels[j] + t * (levels[j + 1] - levels[j]))


def membership_at(u: FuzzyNumber1D, x: float) -> float:
    """Membership grade of ``x``: the top level whose cut still contains it.

    Exact on the piecewise-linear sampled representation; resolved by
    bisection on cut containment for parametric curves.
    """
    x = float(x)
    if isinstance(u, SampledFuzzy1D):
        if not (u.lower[0] <= x <= u.upper[0]):
            return 0.0
        a_lo = _crossing_level(u.grid.levels, u.lower, x, increasing=True)
        a_hi = _crossing_level(u.grid.levels, u.upper, x, increasing=False)
        return min(a_lo, a_hi)
    if alpha_cut(u, 1.0).contains(x):
        return 1.0
    if not alpha_cut(u, 0.0).contains(x):
        return 0.0
    lo, hi = 0.0, 1.0  # contains at lo, not at hi
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if alpha_cut(u, mid).contains(x):
            lo = mid
        else:
            hi = mid
    return lo


def as_curve(u: FuzzyNumber1D) -> CutCurve1D:
    """View a fuzzy number as a parametric cut curve (no-op for curves)."""
    if isinstance(u, CutCurve1D):
        return u
    levels, lower, upper = u.grid.levels, u.lower, u.upper
    return CutCurve1D(
        lower_fn=lambda a: np.interp(a, levels, lower),
        upper_fn=lambda a: np.interp(a, levels, upper),
    )


def sample_curve(u: FuzzyNumber1D, grid: GridLike) -> SampledFuzzy1D:
    """Sample a fuzzy number onto a grid (piecewise-linear approximant)."""
    g = as_grid(grid)
    lo, hi = cut_endpoints(u, g.levels)
    return make_sampled_1d(g, lo, hi)


def refine_to_grid(u: SampledFuzzy1D, grid: GridLike) -> SampledFuzzy1D:
    """Re-express a sampled number on a refinement of its grid.

    The refinement must contain every original node, so the piecewise-linear
    function is preserved exactly.
    """
    g = as_grid(grid)
    if np.setdiff1d(u.grid.levels, g.levels).size:
        raise BadGrid("refinement grid must contain every original node")
    return sample_curve(u, g)


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    alpha: float | None = None
    measured: float | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d: dict = {"name": self.name, "passed": self.passed}
        if self.alpha is not None:
            d["alpha"] = self.alpha
        if self.measured is not None:
            d["measured"] = self.measured
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[ValidationCheck, ...]
    tol: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[ValidationCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "tol": self.tol,
            "checks": [c.to_dict() for c in self.checks],
        }


def _interval_distance(a: tuple[float, float], b: tuple[float, float]) -> float:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def _one_sided_gap(u: FuzzyNumber1D, alpha: float, side: int, jumps: tuple[float, ...]) -> tuple[float, int]:
    """Extrapolated limit gap H(cut(alpha), cut(alpha + side*delta)), delta -> 0.

    Probes geometrically shrinking offsets, skipping any window that would
    straddle a declared jump, and removes the linear-in-delta part so that a
    steep but continuous curve is not mistaken for a jump.  Returns the gap
    estimate and the number of retained probes.
    """
    base = alpha_cut(u, alpha)
    here = (base.lo, base.hi)
    deltas, values = [], []
    for k in range(PROBE_K_MIN, PROBE_K_MAX + 1):
        d = 2.0 ** -k
        probe = alpha + side * d
        if not (0.0 <= probe <= 1.0):
            continue
        window = (min(alpha, probe), max(alpha, probe))
        if any(window[0] < j < window[1] for j in jumps if j != alpha):
            continue
        cut = alpha_cut(u, probe)
        deltas.append(d)
        values.append(_interval_distance(here, (cut.lo, cut.hi)))
    if not values:
        return 0.0, 0
    gap = values[-1]
    if len(values) >= 3:
        slope = (values[-3] - values[-1]) / (deltas[-3] - deltas[-1])
        gap = values[-1] - max(slope, 0.0) * deltas[-1]
    return max(gap, 0.0), len(values)


def _probe_levels(u: FuzzyNumber1D) -> np.ndarray:
    if isinstance(u, SampledFuzzy1D):
        return u.grid.levels
    extra = [j.alpha for j in u.jumps]
    return np.unique(np.concatenate([np.linspace(0.0, 1.0, 21), extra]))


def validate_representation(u: FuzzyNumber1D, tol: float = DEFAULT_VALIDATION_TOL) -> ValidationReport:
    """Check the cut-family axioms on a representation.

    Verifies nonempty cuts and nestedness on a probe grid, left-continuity
    of the cut map on (0, 1] by one-sided numerical limits, and the closure
    condition at 0 (right-continuity there, up to a declared jump).  Failures
    are reported, never raised.
    """
    if not tol > 0:
        raise OutOfRange("tol must be positive")
    levels = _probe_levels(u)
    lo, hi = cut_endpoints(u, levels)
    jumps = tuple(j.alpha for j in u.jumps) if isinstance(u, CutCurve1D) else ()
    checks: list[ValidationCheck] = []

    worst = float(np.max(lo - hi))
    checks.append(
        ValidationCheck(
            name="cuts_nonempty",
            passed=bool(worst <= 0.0),
            measured=worst,
            note="max over probed levels of lower - upper",
        )
    )
    dlo = float(np.min(np.diff(lo))) if levels.size > 1 else 0.0
    dhi = float(np.max(np.diff(hi))) if levels.size > 1 else 0.0
    checks.append(
        ValidationCheck(
            name="nested_lower_nondecreasing",
            passed=bool(dlo >= -tol),
            measured=dlo,
        )
    )
    checks.append(
        ValidationCheck(
            name="nested_upper_nonincreasing",
            passed=bool(dhi <= tol),
            measured=dhi,
        )
    )

    for a in levels:
        if a <= 0.0:
            continue
        gap, used = _one_sided_gap(u, float(a), side=-1, jumps=jumps)
        checks.append(
            ValidationCheck(
                name="left_continuity",
                alpha=float(a),
                passed=bool(used == 0 or gap <= tol),
                measured=gap,
            )
        )

    gap0, used0 = _one_sided_gap(u, 0.0, side=+1, jumps=jumps)
    declared_zero = 0.0 in jumps
    checks.append(
        ValidationCheck(
            name="closure_at_zero",
            alpha=0.0,
            passed=bool(declared_zero or used0 == 0 or gap0 <= tol),
            measured=gap0,
            note="declared jump at 0" if declared_zero else "",
        )
    )
    return ValidationReport(tuple(checks), tol)
