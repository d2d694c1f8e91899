import numpy as np
import pytest

from fuzzymetrics import (
    ParseError,
    d_infty_parametric,
    d_infty_sampled,
    lift_segment,
    make_limit,
    make_sampled_1d,
    make_un,
    random_family,
)
from fuzzymetrics.metrics import LevelProfile
from fuzzymetrics.serialize import (
    decode_any,
    decode_family,
    decode_fuzzy,
    dumps,
    encode_body,
    encode_fuzzy,
    profile_csv,
    sequence_profile_csv,
)


class TestRoundTrip:
    def test_sampled_exact(self):
        for u in random_family(seed=19, count=10):
            v = decode_fuzzy(encode_fuzzy(u))
            assert d_infty_sampled(u, v) == 0.0
            assert np.array_equal(u.grid.levels, v.grid.levels)
            assert np.array_equal(u.lower, v.lower)
            assert np.array_equal(u.upper, v.upper)

    def test_counterexample_constructors(self):
        u = decode_fuzzy({"type": "counterexample-un", "n": 7})
        assert u.key == ("counterexample-un", 7)
        enc = d_infty_parametric(u, make_un(7))
        assert (enc.lower, enc.upper) == (0.0, 0.0)
        lim = decode_fuzzy(encode_fuzzy(make_limit()))
        assert d_infty_parametric(lim, make_limit()).upper == 0.0

    def test_body(self):
        body = lift_segment(make_sampled_1d([0, 1], [0, 0.5], [2, 1]), directions=16)
        doc = encode_body(body)
        back = decode_any(doc)
        assert np.array_equal(back.support, body.support)

    def test_family(self):
        docs = [encode_fuzzy(u) for u in random_family(seed=2, count=3)]
        docs.append({"type": "counterexample-un", "n": 2})
        fam = decode_family(docs)
        assert len(fam) == 4


class TestParseErrors:
    def test_unknown_type(self):
        with pytest.raises(ParseError, match="unknown object type"):
            decode_any({"type": "nope"})

    def test_not_an_object(self):
        with pytest.raises(ParseError):
            decode_any([1, 2, 3])

    def test_invariant_violation_is_named(self):
        doc = {"type": "sampled1d", "alphas": [0, 0.5, 1], "lower": [0, 0.6, 0.5], "upper": [1, 1, 1]}
        with pytest.raises(ParseError, match="nondecreasing"):
            decode_any(doc)

    def test_missing_field(self):
        with pytest.raises(ParseError):
            decode_any({"type": "sampled1d", "alphas": [0, 1], "lower": [0, 0]})

    def test_empty_family(self):
        with pytest.raises(ParseError):
            decode_family([])

    def test_body_expected_number(self):
        body_doc = encode_body(lift_segment(make_sampled_1d([0, 1], [0, 0], [1, 1]), directions=8))
        with pytest.raises(ParseError):
            decode_fuzzy(body_doc)


class TestDeterministicText:
    def test_numpy_scalars_normalized(self):
        doc = {
            "a": np.float64(0.1),
            "b": np.int64(3),
            "c": np.bool_(True),
            "d": np.array([1.5, 2.5]),
        }
        assert dumps(doc) == dumps({"a": 0.1, "b": 3, "c": True, "d": [1.5, 2.5]})

    def test_shortest_round_trip_floats(self):
        text = dumps({"x": 0.1, "y": 1e-9, "z": 2 / 3})
        assert '"x": 0.1' in text
        assert '"y": 1e-09' in text
        assert '"z": 0.6666666666666666' in text

    def test_profile_csv(self):
        prof = LevelProfile(np.array([0.0, 0.5, 1.0]), np.array([0.0, 0.25, 0.0]))
        assert profile_csv(prof) == "alpha,H\n0.0,0.0\n0.5,0.25\n1.0,0.0\n"

    def test_sequence_profile_csv(self):
        rows = [(0.5, 1, 0.25), (0.5, 2, 0.125)]
        assert sequence_profile_csv(rows) == "alpha,n,H\n0.5,1,0.25\n0.5,2,0.125\n"
