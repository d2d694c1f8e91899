"""A sequence that level-converges but stays at supremum distance one.

The member with index n has cuts [0, 1 - (3a/2 - 1/2)^(1/n)] for levels a
above one third and [0, 1] at or below it; the levelwise limit has the
singleton cut {0} above one third and [0, 1] at or below.  Every cut
distance profile vanishes pointwise in n, yet the supremum over levels is
exactly 1 for every member, approached (never attained) as the level
decreases to one third.  This family is the machine-checked refutation of
the published support-bound + equi-left-continuity compactness criteria
for the supremum metric.
"""

from __future__ import annotations

import numpy as np

from .core import CutCurve1D, DeclaredJump
from .errors import BadIndex, OutOfRange
from . import family as family_mod
from .metrics import (
    Enclosure,
    d_infty_parametric,
    default_report_grid,
    level_convergence_report,
)

__all__ = [
    "make_un",
    "make_limit",
    "members",
    "member_sequence",
    "exact_H_profile",
    "exact_dinf_to_limit",
    "dgn_bound",
    "uniform_modulus_bound",
    "family_modulus_oracle",
    "pairwise_dinf_oracle",
    "refutation_report",
]

ONE_THIRD = 1.0 / 3.0

# default window for the level-convergence scan inside the refutation report
DEFAULT_SCAN_WINDOW = 100_000
DEFAULT_EPS = 1e-3


def _inner(alphas) -> np.ndarray:
    """The quantity 3a/2 - 1/2 whose sign selects the cut formula branch.

    Branching is done on this value (not on a compared to 1/3) so that every
    code path applies the identical predicate at the identical floats.
    """
    return 1.5 * np.asarray(alphas, dtype=float) - 0.5


def _member_upper(alphas, n: int) -> np.ndarray:
    a = np.asarray(alphas, dtype=float)
    t = np.atleast_1d(_inner(a))
    out = np.ones_like(t)
    pos = t > 0.0
    # exp(log(t)/n) with the nonpositive branch short-circuited before log
    out[pos] = 1.0 - np.exp(np.log(t[pos]) / n)
    return out.reshape(a.shape)


def _limit_upper(alphas) -> np.ndarray:
    a = np.asarray(alphas, dtype=float)
    t = np.atleast_1d(_inner(a))
    out = np.where(t > 0.0, 0.0, 1.0)
    return out.reshape(a.shape)


def _zeros(alphas) -> np.ndarray:
    a = np.asarray(alphas, dtype=float)
    return np.zeros_like(a)


def make_un(n: int) -> CutCurve1D:
    """Member n of the sequence; continuous cuts, no declared jumps."""
    if int(n) != n or n < 1:
        raise BadIndex(f"member index must be a positive integer, got {n}")
    n = int(n)
    return CutCurve1D(
        lower_fn=_zeros,
        upper_fn=lambda a, _n=n: _member_upper(a, _n),
        jumps=(),
        key=("counterexample-un", n),
    )


def make_limit() -> CutCurve1D:
    """The levelwise limit; its cut jumps from the right at one third."""
    return CutCurve1D(
        lower_fn=_zeros,
        upper_fn=_limit_upper,
        jumps=(DeclaredJump(alpha=ONE_THIRD, lower_right=0.0, upper_right=0.0),),
        key=("counterexample-limit",),
    )


def members(n_max: int) -> list[CutCurve1D]:
    """The finite family of the first ``n_max`` members."""
    if n_max < 1:
        raise BadIndex("n_max must be at least 1")
    return [make_un(n) for n in range(1, n_max + 1)]


def member_sequence():
    """1-based index -> member callable, for streaming sequence scans."""
    return make_un


def exact_H_profile(n: int, alpha):
    """Closed-form cut distance between member n and the limit.

    Equals 1 - (3a/2 - 1/2)^(1/n) above one third and 0 at or below;
    accepts scalars or arrays.
    """
    if int(n) != n or n < 1:
        raise BadIndex(f"member index must be a positive integer, got {n}")
    a = np.asarray(alpha, dtype=float)
    if np.any(a < 0.0) or np.any(a > 1.0):
        raise OutOfRange("alpha outside [0, 1]")
    t = np.atleast_1d(_inner(a))
    out = np.zeros_like(t)
    pos = t > 0.0
    out[pos] = 1.0 - np.exp(np.log(t[pos]) / int(n))
    out = out.reshape(a.shape)
    return float(out) if out.ndim == 0 else out


def exact_dinf_to_limit(n: int) -> tuple[float, bool]:
    """Supremum distance from member n to the limit: exactly 1, not attained.

    The cut distance is 0 at or below one third, strictly below 1 above it,
    and increases to 1 as the level decreases to one third, so the supremum
    is 1 and is only approached.
    """
    if int(n) != n or n < 1:
        raise BadIndex(f"member index must be a positive integer, got {n}")
    return 1.0, False


def dgn_bound(alpha: float, delta: float, beta: float) -> float:
    """Displayed modulus bound (3(a-d)/2 - 1/2)^(-1) * (a - b).

    Requires a - d strictly above one third and b in [a-d, a].  Note: the
    first member's modulus grows at slope 3/2 in the level, so this quotient
    only dominates every member when 3(a-d)/2 - 1/2 <= 2/3; see
    :func:`uniform_modulus_bound` for the bound valid on the whole range.
    """
    t = float(_inner(alpha - delta))
    if not t > 0.0:
        raise OutOfRange(f"alpha - delta = {alpha - delta} must exceed one third")
    if not (alpha - delta <= beta <= alpha):
        raise OutOfRange(f"beta={beta} outside [alpha-delta, alpha]")
    return (alpha - beta) / t


def uniform_modulus_bound(alpha: float, delta: float, beta: float) -> float:
    """Mean-value modulus bound valid for every member index.

    The cut upper endpoint is 1 - t^(1/n) with t = 3a/2 - 1/2, so the
    modulus between levels b <= a is at most (3/2n) t(a-d)^(1/n - 1) (a-b),
    which is itself at most (3/2) (a - b) / t(a-d) for all n >= 1.
    """
    return 1.5 * dgn_bound(alpha, delta, beta)


def family_modulus_oracle(alpha: float, beta: float, n_max: int = 10_000) -> float:
    """Worst-member cut distance between levels ``beta <= alpha``.

    Brute-force scan of (3a/2-1/2)^(1/n) - (3b/2-1/2)^(1/n) over member
    indices; the scan extends past ``n_max`` until the running maximum has
    been stable for ten times the argmax index (the summand tends to 0 in
    n, so the tail cannot overtake a stable maximum in practice).
    """
    ta = float(_inner(alpha))
    tb = float(_inner(beta))
    if not (0.0 < tb and beta <= alpha <= 1.0):
        raise OutOfRange("need one third < beta <= alpha <= 1")
    if n_max < 1:
        raise OutOfRange("n_max must be at least 1")
    la, lb = np.log(ta), np.log(tb)
    best = 0.0
    best_n = 1
    start = 1
    target = n_max
    while start <= target:
        stop = min(target, start + 65_535)
        ns = np.arange(start, stop + 1, dtype=float)
        vals = np.exp(la / ns) - np.exp(lb / ns)
        i = int(np.argmax(vals))
        if vals[i] > best:
            best = float(vals[i])
            best_n = start + i
        start = stop + 1
        target = max(target, min(10 * best_n, 10_000_000))
    return best


def pairwise_dinf_oracle(n: int, m: int, grid_size: int = 1_000_000) -> float:
    """Dense-grid lower bound for the supremum distance between two members.

    The profile |t^(1/n) - t^(1/m)| peaks at levels that approach one third
    geometrically as the indices grow, so the uniform grid is augmented with
    a geometric cluster just above one third.
    """
    if n == m:
        raise OutOfRange("member indices must differ")
    if n < 1 or m < 1:
        raise BadIndex("member indices must be positive")
    if grid_size < 2:
        raise OutOfRange("grid_size must be at least 2")
    uniform = np.linspace(ONE_THIRD, 1.0, grid_size)
    cluster = ONE_THIRD + (2.0 / 3.0) * 10.0 ** -np.arange(1.0, 15.0)
    alphas = np.concatenate([uniform, cluster])
    t = _inner(alphas)
    pos = t > 0.0
    tp = t[pos]
    vals = np.abs(np.exp(np.log(tp) / n) - np.exp(np.log(tp) / m))
    return float(np.max(vals))


def _csv_cell(x) -> str:
    if x is None:
        return ""
    return repr(x) if isinstance(x, float) else str(x)


def _csv_table(header: str, rows) -> str:
    lines = [header]
    for row in rows:
        lines.append(",".join(_csv_cell(x) for x in row))
    return "\n".join(lines) + "\n"


def _equi_witness_delta(alpha: float, eps: float) -> float:
    """A level offset certified to keep every member's modulus within eps."""
    margin = alpha - ONE_THIRD
    return min(0.5 * margin, 0.5 * eps * margin)


def refutation_report(
    n_max: int,
    eps: float = DEFAULT_EPS,
    scan_window: int = DEFAULT_SCAN_WINDOW,
    tol: float = 1e-9,
) -> dict:
    """Machine-checked evidence that the family breaks the published
    supremum-metric compactness criterion.

    Verifies support-boundedness and equi-left-continuity (finite family by
    direct moduli, whole family by the certified bound), levelwise
    convergence to the limit at every probed level, and the constant
    supremum distance 1 to the limit; records closedness as an analytic
    argument corroborated by pairwise separations.  All conditions of the
    criterion hold, yet no subsequence converges in the supremum metric.
    """
    if n_max < 2:
        raise OutOfRange("n_max must be at least 2 to exhibit a sequence")
    fam = members(n_max)
    limit = make_limit()
    grid = default_report_grid(counterexample_aware=True)

    radius, bounded = family_mod.support_bound(fam)
    support_section = {
        "radius": radius,
        "bounded": bounded,
        "passed": bool(bounded and radius <= 1.0),
        "note": "every member's 0-cut is [0, 1] by the closed form, so the whole infinite family shares this radius",
    }

    probe_alphas = np.union1d(
        np.linspace(0.05, 1.0, 20), [ONE_THIRD] + [ONE_THIRD + 10.0 ** -k for k in range(2, 7)]
    )
    equi_entries = []
    equi_ok = True
    for a in probe_alphas.tolist():
        if _inner(a) <= 0.0:
            delta = 0.5 * a
            entry = {
                "alpha": a,
                "delta": delta,
                "certified_bound": 0.0,
                "finite_family_modulus": family_mod.left_modulus(fam, a, delta),
                "oracle_modulus": 0.0,
            }
        else:
            delta = _equi_witness_delta(a, eps)
            entry = {
                "alpha": a,
                "delta": delta,
                "certified_bound": uniform_modulus_bound(a, delta, a - delta),
                "finite_family_modulus": family_mod.left_modulus(fam, a, delta),
                "oracle_modulus": family_modulus_oracle(a, a - delta, n_max=max(n_max, 1000)),
            }
        entry["passed"] = bool(
            entry["certified_bound"] <= eps
            and entry["finite_family_modulus"] <= eps
            and entry["oracle_modulus"] <= eps
        )
        equi_ok = equi_ok and entry["passed"]
        equi_entries.append(entry)
    right_zero = family_mod.right_modulus_at_zero(fam, 0.25)
    equi_section = {
        "eps": eps,
        "passed": bool(equi_ok and right_zero == 0.0),
        "right_at_zero_modulus": right_zero,
        "entries": equi_entries,
    }

    convergence = level_convergence_report(member_sequence(), limit, grid, eps, scan_window)
    convergence_section = {
        "eps": eps,
        "scan_window": scan_window,
        "converged": convergence.converged,
        "failing_alphas": list(convergence.failing_alphas),
        "table_csv": _csv_table(
            "alpha,first_index",
            [(e.alpha, e.first_index) for e in convergence.entries],
        ),
    }

    sup_entries = []
    all_one = True
    none_attained = True
    grid_alphas = grid.levels
    for n in range(1, n_max + 1):
        value, attained = exact_dinf_to_limit(n)
        enc: Enclosure = d_infty_parametric(make_un(n), limit, tol=tol)
        grid_max = float(np.max(exact_H_profile(n, grid_alphas)))
        all_one = all_one and value == 1.0 and enc.lower <= 1.0 <= enc.upper and enc.width <= tol
        none_attained = none_attained and not attained and not enc.attained
        sup_entries.append(
            {
                "n": n,
                "value": value,
                "attained": attained,
                "enclosure_lower": enc.lower,
                "enclosure_upper": enc.upper,
                "grid_max": grid_max,
            }
        )
    sup_section = {
        "all_equal_one": bool(all_one),
        "attained_anywhere": bool(not none_attained),
        "entries": sup_entries,
    }

    pair_probes = [n for n in (1, 2, 3, 5, 10) if n <= n_max]
    pairs = []
    for n in pair_probes:
        m = 5 * n
        sep = pairwise_dinf_oracle(n, m, grid_size=200_001)
        pairs.append({"n": n, "m": m, "separation_lower_bound": sep})
    closedness_section = {
        "evaluated": False,
        "assertion": (
            "every member sits at supremum distance exactly 1 from the levelwise "
            "limit, and a supremum-metric limit of any subsequence would have to "
            "coincide with that levelwise limit; hence the sequence has no "
            "accumulation point and the set is closed in the supremum metric. "
            "Analytic argument, not a finite computation; the pairwise "
            "separations below corroborate that no subsequence is Cauchy."
        ),
        "pairwise_separation": pairs,
        "min_pairwise_separation": min(p["separation_lower_bound"] for p in pairs),
    }

    all_conditions = bool(support_section["passed"] and equi_section["passed"])
    refuted = bool(
        all_conditions and convergence_section["converged"] and sup_section["all_equal_one"]
    )
    conclusion = {
        "support_bounded": support_section["passed"],
        "equi_left_continuous": equi_section["passed"],
        "closed": "asserted-analytic",
        "level_convergent": convergence_section["converged"],
        "supremum_distance_to_limit": 1.0,
        "supremum_metric_convergent": False,
        "compact_in_supremum_metric": False,
        "criterion_refuted": refuted,
    }

    return {
        "n_max": n_max,
        "eps": eps,
        "scan_window": scan_window,
        "tol": tol,
        "support_bound": support_section,
        "equi_left_continuity": equi_section,
        "level_convergence": convergence_section,
        "supremum_distance": sup_section,
        "closedness": closedness_section,
        "conclusion": conclusion,
    }
