"""JSON/CSV encoding of fuzzy numbers, bodies, and reports.

All emitted JSON is deterministic: insertion-ordered keys, two-space
indentation, and shortest round-trip float formatting (never more than 17
significant digits), so identical inputs produce byte-identical artifacts.
"""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .bodies import FuzzyBody2D, make_body_2d
from .core import CutCurve1D, FuzzyNumber1D, SampledFuzzy1D, make_sampled_1d
from .errors import FuzzyMetricsError, ParseError
from .metrics import LevelProfile

__all__ = [
    "encode_fuzzy",
    "decode_fuzzy",
    "decode_family",
    "encode_body",
    "decode_any",
    "dumps",
    "profile_csv",
    "sequence_profile_csv",
]


def _jsonable(obj: Any) -> Any:
    """Recursively strip numpy scalar/array types for the json encoder."""
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else None  # NaN/inf are not valid JSON
    return obj


def dumps(obj: Any) -> str:
    """Deterministic JSON text for a report object."""
    return json.dumps(_jsonable(obj), indent=2, ensure_ascii=False) + "\n"


def encode_fuzzy(u: FuzzyNumber1D) -> dict:
    """Encode a fuzzy number; parametric counterexample objects round-trip
    through their constructor form."""
    if isinstance(u, SampledFuzzy1D):
        return {
            "type": "sampled1d",
            "alphas": u.grid.levels.tolist(),
            "lower": u.lower.tolist(),
            "upper": u.upper.tolist(),
        }
    if isinstance(u, CutCurve1D):
        key = u.key
        if isinstance(key, tuple) and key and key[0] == "counterexample-un":
            return {"type": "counterexample-un", "n": int(key[1])}
        if isinstance(key, tuple) and key and key[0] == "counterexample-limit":
            return {"type": "counterexample-limit"}
        raise ParseError("only counterexample curves have a JSON constructor form")
    raise ParseError(f"cannot encode object of type {type(u).__name__}")


def encode_body(body: FuzzyBody2D) -> dict:
    return {
        "type": "body2d",
        "alphas": body.grid.levels.tolist(),
        "directions": body.directions,
        "support": body.support.tolist(),
    }


def decode_fuzzy(doc: Any) -> FuzzyNumber1D:
    """Decode a 1-D fuzzy number from its JSON object form."""
    obj = decode_any(doc)
    if isinstance(obj, FuzzyBody2D):
        raise ParseError("expected a 1-D fuzzy number, got a 2-D body")
    return obj


def decode_any(doc: Any):
    """Decode any supported object; invariant violations become ParseError."""
    from .counterexample import make_limit, make_un

    if not isinstance(doc, dict) or "type" not in doc:
        raise ParseError("expected an object with a 'type' field")
    kind = doc["type"]
    try:
        if kind == "sampled1d":
            return make_sampled_1d(doc["alphas"], doc["lower"], doc["upper"])
        if kind == "counterexample-un":
            return make_un(int(doc["n"]))
        if kind == "counterexample-limit":
            return make_limit()
        if kind == "body2d":
            support = np.asarray(doc["support"], dtype=float)
            if support.ndim != 2 or support.shape[1] != int(doc["directions"]):
                raise ParseError("support matrix shape does not match the declared direction count")
            return make_body_2d(doc["alphas"], support)
    except ParseError:
        raise
    except (FuzzyMetricsError, ValueError, TypeError, KeyError) as exc:
        raise ParseError(f"invalid {kind} object: {exc}") from exc
    raise ParseError(f"unknown object type: {kind!r}")


def decode_family(doc: Any) -> list[FuzzyNumber1D]:
    if not isinstance(doc, list) or not doc:
        raise ParseError("a family file holds a nonempty JSON array of fuzzy numbers")
    return [decode_fuzzy(item) for item in doc]


def _fmt(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return str(x)


def profile_csv(profile: LevelProfile) -> str:
    """Level distance profile as plottable rows: alpha,H."""
    lines = ["alpha,H"]
    lines.extend(f"{_fmt(a)},{_fmt(h)}" for a, h in profile)
    return "\n".join(lines) + "\n"


def sequence_profile_csv(rows) -> str:
    """Per-member profile rows: alpha,n,H."""
    lines = ["alpha,n,H"]
    lines.extend(f"{_fmt(a)},{_fmt(n)},{_fmt(h)}" for a, n, h in rows)
    return "\n".join(lines) + "\n"
