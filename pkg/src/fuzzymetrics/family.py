"""Family-level diagnostics: support bounds and equi-continuity moduli.

A family here is any finite collection of 1-D fuzzy numbers.  The moduli
measure how far cuts can move when the level drops by delta, uniformly over
the family; together with the support radius they realize the checkable
conditions of the compactness criteria for the level topology and for the
supremum metric.  Everything reported is a finite certificate over the
tested grids, never a claim about the underlying topological property.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import FuzzyNumber1D, SampledFuzzy1D, cut_endpoints, make_sampled_1d
from .errors import EmptyFamily, OutOfRange
from .metrics import is_counterexample_object

__all__ = [
    "DEFAULT_DELTA_GRID",
    "DEFAULT_EPS",
    "default_alpha_grid",
    "support_bound",
    "left_modulus",
    "right_modulus_at_zero",
    "EquiEntry",
    "EquiContinuityReport",
    "equi_continuity_report",
    "eventually_equi_left",
    "FamilyDiagnostics",
    "compactness_conditions_report",
    "path_family",
    "random_family",
]

# geometric offsets 2**-k, k = 2..20: four orders of magnitude in 19 probes
DEFAULT_DELTA_GRID = tuple(2.0 ** -k for k in range(2, 21))
# witness tolerance: a tenth of the unit support scale.  Near a steep-but-
# continuous level the finest default offset (2**-20) cannot witness much
# smaller moduli, so a tighter default would flag continuous families.
DEFAULT_EPS = 0.1

CLOSEDNESS_MARKER = "not evaluated - supplied by caller assertion"


def default_alpha_grid(counterexample_aware: bool = False) -> np.ndarray:
    """101 uniform levels on (0, 1], densified near one third when asked."""
    levels = np.arange(1, 102) / 101.0
    if counterexample_aware:
        offsets = 10.0 ** -np.arange(2, 7)
        extra = np.concatenate([1.0 / 3.0 + offsets, 1.0 / 3.0 - offsets, [1.0 / 3.0]])
        levels = np.union1d(levels, extra[(extra > 0.0) & (extra <= 1.0)])
    return levels


def _require_members(family: Sequence[FuzzyNumber1D]) -> list[FuzzyNumber1D]:
    members = list(family)
    if not members:
        raise EmptyFamily("family has no members")
    return members


def support_bound(family: Sequence[FuzzyNumber1D]) -> tuple[float, bool]:
    """Smallest origin-centered radius containing every member's 0-cut.

    Finite families are always bounded; the radius is what matters for
    threshold checks against an externally chosen compact set.
    """
    members = _require_members(family)
    radius = 0.0
    for u in members:
        lo, hi = cut_endpoints(u, np.asarray(0.0))
        radius = max(radius, abs(float(lo)), abs(float(hi)))
    return radius, True


def _pair_moduli(u: FuzzyNumber1D, alphas: np.ndarray, betas: np.ndarray) -> np.ndarray:
    """H(cut(alpha_i), cut(beta_i)) for one member, vectorized."""
    lo_a, hi_a = cut_endpoints(u, alphas)
    lo_b, hi_b = cut_endpoints(u, betas)
    return np.maximum(np.abs(lo_a - lo_b), np.abs(hi_a - hi_b))


def left_modulus(family: Sequence[FuzzyNumber1D], alpha: float, delta: float) -> float:
    """Worst member's cut distance between levels alpha - delta and alpha.

    By nestedness the sup over intermediate levels is attained at the full
    offset, so a single evaluation per member suffices.
    """
    if not (0.0 < alpha <= 1.0):
        raise OutOfRange(f"alpha={alpha} outside (0, 1]")
    if not (0.0 < delta <= alpha):
        raise OutOfRange(f"delta={delta} outside (0, alpha]")
    members = _require_members(family)
    a = np.asarray([alpha])
    b = np.asarray([alpha - delta])
    return max(float(_pair_moduli(u, a, b)[0]) for u in members)


def right_modulus_at_zero(family: Sequence[FuzzyNumber1D], delta: float) -> float:
    """Worst member's cut distance between level 0 and level delta."""
    if not (0.0 < delta <= 1.0):
        raise OutOfRange(f"delta={delta} outside (0, 1]")
    members = _require_members(family)
    a = np.asarray([0.0])
    b = np.asarray([delta])
    return max(float(_pair_moduli(u, a, b)[0]) for u in members)


def _moduli_table(
    members: list[FuzzyNumber1D], alphas: np.ndarray, deltas: np.ndarray
) -> np.ndarray:
    """Family moduli on the (alpha, delta) lattice; NaN where delta > alpha."""
    pairs_a = np.repeat(alphas, deltas.size)
    pairs_d = np.tile(deltas, alphas.size)
    valid = pairs_d <= pairs_a
    pairs_b = np.where(valid, pairs_a - pairs_d, pairs_a)
    worst = np.zeros(pairs_a.size)
    for u in members:
        worst = np.maximum(worst, _pair_moduli(u, pairs_a, pairs_b))
    worst[~valid] = np.nan
    return worst.reshape(alphas.size, deltas.size)


@dataclass(frozen=True)
class EquiEntry:
    """Witness search outcome at one level."""

    alpha: float
    witness_delta: float | None
    modulus: float

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "witness_delta": self.witness_delta,
            "modulus": self.modulus,
        }


@dataclass(frozen=True)
class EquiContinuityReport:
    """Per-level equi-continuity certificates over the tested grids."""

    entries: tuple[EquiEntry, ...]
    right_at_zero: EquiEntry
    eps: float
    delta_grid: tuple[float, ...]

    @property
    def left_passed(self) -> bool:
        return all(e.witness_delta is not None for e in self.entries)

    @property
    def passed(self) -> bool:
        return self.left_passed and self.right_at_zero.witness_delta is not None

    def to_dict(self) -> dict:
        return {
            "eps": self.eps,
            "delta_grid": list(self.delta_grid),
            "passed": self.passed,
            "left_passed": self.left_passed,
            "entries": [e.to_dict() for e in self.entries],
            "right_at_zero": self.right_at_zero.to_dict(),
        }


def equi_continuity_report(
    family: Sequence[FuzzyNumber1D],
    alpha_grid: Sequence[float] | np.ndarray | None = None,
    delta_grid: Sequence[float] | np.ndarray | None = None,
    eps: float = DEFAULT_EPS,
) -> EquiContinuityReport:
    """Search each tested level for a delta that tames the family modulus.

    Reports, per level in (0, 1], the largest tested delta whose modulus
    stays within eps (witness), or no witness if even the smallest tested
    delta fails; plus the analogous right-side entry at level 0.
    """
    if not eps > 0:
        raise OutOfRange("eps must be positive")
    members = _require_members(family)
    if alpha_grid is None:
        aware = any(is_counterexample_object(u) for u in members)
        alpha_grid = default_alpha_grid(counterexample_aware=aware)
    alphas = np.unique(np.asarray(alpha_grid, dtype=float))
    alphas = alphas[(alphas > 0.0) & (alphas <= 1.0)]
    if alphas.size == 0:
        raise OutOfRange("alpha grid has no levels inside (0, 1]")
    deltas = np.asarray(
        sorted(DEFAULT_DELTA_GRID if delta_grid is None else delta_grid, reverse=True),
        dtype=float,
    )
    if deltas.size == 0 or np.any(deltas <= 0):
        raise OutOfRange("delta grid must hold positive offsets")

    table = _moduli_table(members, alphas, deltas)
    entries = []
    for i, a in enumerate(alphas.tolist()):
        row = table[i]
        witness = None
        modulus = np.nan
        for j in range(deltas.size):  # largest tested delta first
            if np.isnan(row[j]):
                continue
            if row[j] <= eps:
                witness = float(deltas[j])
                modulus = float(row[j])
                break
            modulus = float(row[j])
        entries.append(EquiEntry(alpha=a, witness_delta=witness, modulus=float(modulus)))

    zero_witness = None
    zero_modulus = np.nan
    for d in deltas.tolist():
        if d > 1.0:
            continue
        m = right_modulus_at_zero(members, d)
        if m <= eps:
            zero_witness, zero_modulus = d, m
            break
        zero_modulus = m
    right_entry = EquiEntry(alpha=0.0, witness_delta=zero_witness, modulus=float(zero_modulus))
    return EquiContinuityReport(
        entries=tuple(entries),
        right_at_zero=right_entry,
        eps=eps,
        delta_grid=tuple(deltas.tolist()),
    )


def eventually_equi_left(
    seq: Sequence[FuzzyNumber1D],
    alpha: float,
    eps: float,
    n_max: int | None = None,
    delta_grid: Sequence[float] | None = None,
) -> tuple[int, float] | None:
    """Find (k0, delta) taming the modulus of every member from k0 onward.

    Scans the window k0 <= k <= n_max only; returns the smallest such k0
    (preferring the smallest delta on ties) or None when no tested pair
    works within the window.
    """
    if not (0.0 < alpha <= 1.0):
        raise OutOfRange(f"alpha={alpha} outside (0, 1]")
    if not eps > 0:
        raise OutOfRange("eps must be positive")
    members = list(seq)
    if n_max is not None:
        members = members[:n_max]
    members = _require_members(members)
    deltas = [d for d in (DEFAULT_DELTA_GRID if delta_grid is None else delta_grid) if d <= alpha]
    if not deltas:
        return None
    a = np.asarray([alpha])
    best: tuple[int, float] | None = None
    for d in sorted(deltas):  # smallest delta first, so ties keep it
        b = np.asarray([alpha - d])
        last_violation = 0
        for k, u in enumerate(members, start=1):
            if float(_pair_moduli(u, a, b)[0]) >= eps:
                last_violation = k
        if last_violation < len(members):
            k0 = last_violation + 1
            if best is None or k0 < best[0]:
                best = (k0, d)
    return best


@dataclass(frozen=True)
class FamilyDiagnostics:
    """Bundle of support radius, moduli tables, and criteria verdicts.

    ``condition_verdicts`` carries the level-topology criterion (closed +
    support-bounded + equi-left-continuous on (0,1] and equi-right at 0)
    and the published supremum-metric criterion (support-bounded + closed +
    equi-left-continuous).  Their shared conditions are evaluated once and
    the two verdict trees reference the very same objects.  Closedness is
    never inferred from a finite family.
    """

    support_radius: float
    bounded: bool
    left_moduli: dict
    right_modulus_at_zero: dict
    condition_verdicts: dict

    def to_dict(self) -> dict:
        return {
            "support_radius": self.support_radius,
            "bounded": self.bounded,
            "left_moduli": [
                {
                    "alpha": a,
                    "moduli": [
                        {"delta": d, "value": v} for d, v in sorted(row.items(), reverse=True)
                    ],
                }
                for a, row in sorted(self.left_moduli.items())
            ],
            "right_modulus_at_zero": [
                {"delta": d, "value": v}
                for d, v in sorted(self.right_modulus_at_zero.items(), reverse=True)
            ],
            "condition_verdicts": self.condition_verdicts,
        }

    @property
    def passed(self) -> bool:
        v = self.condition_verdicts["supremum_metric_criterion"]
        return bool(v["support_bounded"]["passed"] and v["equi_left_continuity"]["passed"])


def compactness_conditions_report(
    family: Sequence[FuzzyNumber1D],
    alpha_grid: Sequence[float] | np.ndarray | None = None,
    delta_grid: Sequence[float] | None = None,
    eps: float = DEFAULT_EPS,
) -> FamilyDiagnostics:
    """Evaluate every checkable compactness condition on a finite family.

    The support bound and the equi-continuity certificates feed both
    criteria's verdicts from one computation; closedness is reported as
    caller-asserted because no finite sample can decide it.
    """
    members = _require_members(family)
    radius, bounded = support_bound(members)
    report = equi_continuity_report(members, alpha_grid, delta_grid, eps)

    deltas = np.asarray(report.delta_grid)
    alphas = np.asarray([e.alpha for e in report.entries])
    table = _moduli_table(members, alphas, deltas)
    left_moduli = {
        float(a): {
            float(d): float(table[i, j])
            for j, d in enumerate(deltas.tolist())
            if not np.isnan(table[i, j])
        }
        for i, a in enumerate(alphas.tolist())
    }
    zero_deltas = [d for d in deltas.tolist() if d <= 1.0]
    zero_moduli = {float(d): right_modulus_at_zero(members, d) for d in zero_deltas}

    support_verdict = {"radius": radius, "bounded": bounded, "passed": bool(bounded)}
    left_verdict = {
        "passed": report.left_passed,
        "eps": report.eps,
        "per_alpha": [e.to_dict() for e in report.entries],
    }
    right_verdict = {
        "passed": report.right_at_zero.witness_delta is not None,
        "eps": report.eps,
        "entry": report.right_at_zero.to_dict(),
    }
    verdicts = {
        "level_topology_criterion": {
            "closed": CLOSEDNESS_MARKER,
            "support_bounded": support_verdict,
            "equi_continuity": {"left": left_verdict, "right_at_zero": right_verdict},
        },
        "supremum_metric_criterion": {
            "support_bounded": support_verdict,
            "closed": CLOSEDNESS_MARKER,
            "equi_left_continuity": left_verdict,
        },
    }
    return FamilyDiagnostics(
        support_radius=radius,
        bounded=bounded,
        left_moduli=left_moduli,
        right_modulus_at_zero=zero_moduli,
        condition_verdicts=verdicts,
    )


def path_family(
    f: Callable[[float], FuzzyNumber1D], a: float, b: float, sample_count: int
) -> list[FuzzyNumber1D]:
    """Sample a parametrized path of fuzzy numbers at uniform parameters.

    When f is continuous into the level topology, the sampled family's
    equi-continuity report should pass: a continuous image of a compact
    parameter interval satisfies the family conditions.
    """
    if sample_count < 2:
        raise OutOfRange("sample_count must be at least 2")
    return [f(float(t)) for t in np.linspace(a, b, sample_count)]


def random_family(
    seed: int,
    count: int,
    levels: int = 9,
    spread: float = 1.0,
    center_range: tuple[float, float] = (-1.0, 1.0),
    jump_at: float | None = None,
    jump_size: float = 0.5,
) -> list[SampledFuzzy1D]:
    """Deterministic generator of valid sampled fuzzy numbers.

    Endpoint monotonicity is guaranteed by sorting random offsets around a
    random center.  With ``jump_at`` set, every member's upper endpoint
    drops by at least ``jump_size`` across a squeezed grid gap just below
    that level, which defeats equi-left-continuity there while each member
    stays a perfectly valid fuzzy number.
    """
    if count < 1:
        raise OutOfRange("count must be at least 1")
    if levels < 2:
        raise OutOfRange("levels must be at least 2")
    rng = np.random.default_rng(seed)
    grid_levels = np.linspace(0.0, 1.0, levels)
    if jump_at is not None:
        if not (0.0 < jump_at < 1.0):
            raise OutOfRange("jump_at must lie strictly inside (0, 1)")
        # squeeze width 1e-6: narrower than every default modulus offset, yet
        # wide enough that validation probes resolve the segment as linear
        grid_levels = np.union1d(grid_levels, [jump_at - 1e-6, jump_at])
    members = []
    for _ in range(count):
        center = rng.uniform(*center_range)
        down = np.sort(rng.uniform(0.0, spread, grid_levels.size))[::-1]
        up = np.sort(rng.uniform(0.0, spread, grid_levels.size))[::-1]
        lower = center - down
        upper = center + up
        if jump_at is not None:
            upper = upper + np.where(grid_levels < jump_at, jump_size, 0.0)
        members.append(make_sampled_1d(grid_levels, lower, upper))
    return members
