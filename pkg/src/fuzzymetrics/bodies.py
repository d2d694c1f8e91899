"""Planar convex bodies sampled by their support function.

A convex body is encoded as support values h(theta) = sup over the body of
<(cos theta, sin theta), x> on a uniform direction grid; a fuzzy body stacks
one such sample vector per membership level, nested downward in alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .core import AlphaGrid, GridLike, SampledFuzzy1D, as_grid, _check_level
from .errors import EmptyCut, GridMismatch, NonNested, OutOfRange

__all__ = [
    "DEFAULT_DIRECTIONS",
    "direction_angles",
    "PlanarSupport",
    "FuzzyBody2D",
    "make_body_2d",
    "support_function_value",
    "lift_segment",
    "chebyshev_radius",
]

# 1 degree resolution; even count keeps 0 and pi on the grid exactly.
DEFAULT_DIRECTIONS = 360


def direction_angles(count: int) -> np.ndarray:
    """Uniform angles 2*pi*k/count, k = 0..count-1."""
    if count < 3:
        raise OutOfRange("need at least 3 directions to bound a planar body")
    return 2.0 * np.pi * np.arange(count) / count


@dataclass(frozen=True)
class PlanarSupport:
    """Support samples of one convex body on a uniform direction grid."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).copy()
        if v.ndim != 1 or v.size < 3:
            raise OutOfRange("support sample vector needs at least 3 directions")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @property
    def directions(self) -> int:
        return int(self.values.size)

    def support(self, theta: float) -> float:
        """Support value at an arbitrary angle, linear between grid angles."""
        n = self.directions
        pos = float(theta) % (2.0 * np.pi) / (2.0 * np.pi) * n
        k = int(pos) % n
        t = pos - int(pos)
        if t == 0.0:
            return float(self.values[k])
        return float((1.0 - t) * self.values[k] + t * self.values[(k + 1) % n])


def chebyshev_radius(body: PlanarSupport) -> float:
    """Radius of the largest disk inside the halfplane intersection.

    Negative when the sampled halfplanes have empty intersection, zero for
    degenerate (lower-dimensional) bodies.
    """
    th = direction_angles(body.directions)
    a = np.column_stack([np.cos(th), np.sin(th), np.ones_like(th)])
    res = linprog(
        c=[0.0, 0.0, -1.0],
        A_ub=a,
        b_ub=body.values,
        bounds=[(None, None), (None, None), (None, None)],
        method="highs",
    )
    if not res.success:
        raise ArithmeticError(f"support feasibility LP failed: {res.message}")
    return float(-res.fun)


@dataclass(frozen=True)
class FuzzyBody2D:
    """Alpha-indexed nested family of planar bodies via support samples.

    ``support`` has one row per grid level and one column per direction.
    """

    grid: AlphaGrid
    support: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.support, dtype=float).copy()
        if s.ndim != 2 or s.shape[0] != len(self.grid):
            raise GridMismatch("support matrix must have one row per grid level")
        s.flags.writeable = False
        object.__setattr__(self, "support", s)

    @property
    def directions(self) -> int:
        return int(self.support.shape[1])

    def body(self, level_index: int) -> PlanarSupport:
        return PlanarSupport(self.support[level_index])


def make_body_2d(
    grid: GridLike,
    support: np.ndarray,
    reconstruction_tol: float = 1e-9,
) -> FuzzyBody2D:
    """Build a validated fuzzy body from per-level support samples.

    Checks nestedness (support nonincreasing in alpha, directionwise) and
    that each level's halfplane intersection is a nonempty bounded polygon.
    """
    g = as_grid(grid)
    s = np.asarray(support, dtype=float)
    if s.ndim != 2 or s.shape[0] != len(g):
        raise GridMismatch("support matrix must have one row per grid level")
    if s.shape[1] < 3:
        raise OutOfRange("need at least 3 directions")
    if np.any(np.diff(s, axis=0) > 0):
        raise NonNested("support values must be nonincreasing in alpha in every direction")
    body = FuzzyBody2D(g, s)
    for i in range(len(g)):
        r = chebyshev_radius(body.body(i))
        if r < -reconstruction_tol:
            raise EmptyCut(f"support samples at alpha={g.levels[i]} bound an empty region (radius {r})")
    return body


def support_function_value(body: FuzzyBody2D, alpha: float, theta: float) -> float:
    """Support value at (alpha, theta), bilinear between stored samples."""
    a = _check_level(alpha)
    levels = body.grid.levels
    i = int(np.searchsorted(levels, a))
    if i < levels.size and levels[i] == a:
        return body.body(i).support(theta)
    lo = body.body(i - 1).support(theta)
    hi = body.body(i).support(theta)
    t = (a - levels[i - 1]) / (levels[i] - levels[i - 1])
    return float(lo + t * (hi - lo))


def lift_segment(u: SampledFuzzy1D, directions: int = DEFAULT_DIRECTIONS) -> FuzzyBody2D:
    """Embed a 1-D fuzzy number as the segment [lower, upper] on the x-axis.

    The segment's support is hi*cos(theta) in forward directions and
    lo*cos(theta) in backward ones, so values at angles 0 and pi recover the
    endpoints exactly.
    """
    c = np.cos(direction_angles(directions))
    fwd = c >= 0.0
    s = np.where(fwd[None, :], u.upper[:, None] * c[None, :], u.lower[:, None] * c[None, :])
    return FuzzyBody2D(u.grid, s)
