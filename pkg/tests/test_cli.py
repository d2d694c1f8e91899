import json

import pytest

from fuzzymetrics.cli import run
from fuzzymetrics.serialize import decode_fuzzy
from fuzzymetrics import d_infty_sampled


@pytest.fixture
def tri_file(tmp_path):
    path = tmp_path / "tri.json"
    path.write_text(
        json.dumps(
            {
                "type": "sampled1d",
                "alphas": [0, 0.5, 1],
                "lower": [0, 0.25, 0.5],
                "upper": [1, 0.75, 0.5],
            }
        )
    )
    return str(path)


@pytest.fixture
def broken_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(
        json.dumps(
            {
                "type": "sampled1d",
                "alphas": [0, 0.5, 1],
                "lower": [0, 0.6, 0.5],
                "upper": [1, 1, 1],
            }
        )
    )
    return str(path)


@pytest.fixture
def family_file(tmp_path):
    path = tmp_path / "family.json"
    path.write_text(json.dumps([{"type": "counterexample-un", "n": n} for n in range(1, 6)]))
    return str(path)


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


class TestValidateVerb:
    def test_valid_input(self, tri_file, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert run(["validate", tri_file, "--out", str(out)]) == 0
        doc = read_json(out)
        assert doc["validation"]["passed"] is True
        assert doc["header"]["command"] == "validate"
        assert doc["header"]["options"]["tol"] == 1e-9

    def test_broken_input_names_invariant(self, broken_file, capsys):
        assert run(["validate", broken_file]) == 1
        err = capsys.readouterr().err
        assert "nondecreasing" in err

    def test_csv_format(self, tri_file, capsys):
        assert run(["validate", tri_file, "--format", "csv"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("check,alpha,passed,measured\n")

    def test_missing_file(self, capsys):
        assert run(["validate", "no-such-file.json"]) == 1


class TestDistVerb:
    def test_same_sampled_number_is_zero(self, tri_file, tmp_path, capsys):
        other = tmp_path / "tri2.json"
        other.write_text(open(tri_file).read())
        assert run(["dist", tri_file, str(other)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["method"] == "sampled-grid-max"
        assert doc["d_infty"] == 0.0

    def test_counterexample_pair_encloses_one(self, capsys):
        assert run(["dist", "counterexample-un:5", "counterexample-limit"]) == 0
        doc = json.loads(capsys.readouterr().out)
        enc = doc["enclosure"]
        assert enc["lower"] <= 1.0 <= enc["upper"]
        assert enc["attained"] is False

    def test_mixed_inputs_use_enclosure(self, tri_file, capsys):
        assert run(["dist", tri_file, "counterexample-un:1", "--tol", "1e-6"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["method"] == "parametric-bisection"


class TestProfileVerb:
    def test_csv_schema(self, capsys):
        assert run(["profile", "counterexample-un:1", "counterexample-limit", "--grid", "5"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "alpha,H"
        assert len(lines) == 6

    def test_json_format(self, capsys):
        assert run(
            ["profile", "counterexample-un:1", "counterexample-limit", "--grid", "3", "--format", "json"]
        ) == 0
        doc = json.loads(capsys.readouterr().out)
        assert [row["alpha"] for row in doc["profile"]] == [0.0, 0.5, 1.0]

    def test_sequence_profile_schema(self, family_file, capsys):
        assert run(["profile", family_file, "counterexample-limit", "--grid", "3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "alpha,n,H"
        assert len(lines) == 1 + 3 * 5
        assert lines[2] == "0.5,1,0.75"

    def test_inline_sequence_profile(self, capsys):
        assert run(
            ["profile", "counterexample-seq", "counterexample-limit", "--grid", "3", "--n-max", "2"]
        ) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 1 + 3 * 2


class TestConvergeVerb:
    def test_family_file_sequence(self, family_file, capsys):
        assert run(["converge", family_file, "counterexample-limit", "--grid", "5", "--eps", "0.5"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["convergence"]["converged"] is True

    def test_strict_failure_exits_two(self, family_file, capsys):
        code = run(
            [
                "converge",
                family_file,
                "counterexample-limit",
                "--grid",
                "5",
                "--eps",
                "0.2",
                "--strict",
            ]
        )
        assert code == 2

    def test_streamed_counterexample_sequence(self, capsys):
        assert run(
            [
                "converge",
                "counterexample-seq",
                "counterexample-limit",
                "--grid",
                "5",
                "--eps",
                "0.01",
                "--n-max",
                "2000",
                "--format",
                "csv",
            ]
        ) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "alpha,first_index,reached"
        assert all(line.endswith("true") for line in lines[1:])


class TestFamilyReportVerb:
    def test_counterexample_family_passes(self, family_file, tmp_path):
        out = tmp_path / "diag.json"
        assert run(["family-report", family_file, "--strict", "--out", str(out)]) == 0
        doc = read_json(out)
        diag = doc["diagnostics"]
        assert diag["support_radius"] == 1.0
        verdicts = diag["condition_verdicts"]
        assert verdicts["supremum_metric_criterion"]["equi_left_continuity"]["passed"]

    def test_csv_rejected(self, family_file, capsys):
        assert run(["family-report", family_file, "--format", "csv"]) == 1

    def test_delta_grid_specs(self, family_file, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert run(["family-report", family_file, "--delta-grid", "pow2:2..6", "--out", str(a)]) == 0
        assert run(
            ["family-report", family_file, "--delta-grid", "0.25,0.125,0.0625,0.03125,0.015625", "--out", str(b)]
        ) == 0
        assert read_json(a)["diagnostics"] == read_json(b)["diagnostics"]

    def test_bad_delta_grid_spec(self, family_file, capsys):
        assert run(["family-report", family_file, "--delta-grid", "pow2:x..y"]) == 1

    def test_deterministic_bytes(self, family_file, tmp_path):
        a, b = tmp_path / "r1.json", tmp_path / "r2.json"
        assert run(["family-report", family_file, "--out", str(a)]) == 0
        assert run(["family-report", family_file, "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestCounterexampleVerb:
    def test_strict_small_run(self, tmp_path):
        out = tmp_path / "refutation.json"
        assert run(["counterexample", "--n-max", "5", "--strict", "--out", str(out)]) == 0
        doc = read_json(out)
        assert doc["report"]["conclusion"]["criterion_refuted"] is True
        assert doc["header"]["options"]["n_max"] == 5

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert run(["counterexample", "--n-max", "3", "--out", str(a)]) == 0
        assert run(["counterexample", "--n-max", "3", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestArgHandling:
    def test_unknown_option_is_input_error(self, tri_file, capsys):
        assert run(["validate", tri_file, "--frobnicate"]) == 1

    def test_unknown_verb(self, capsys):
        assert run(["explode"]) == 1

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0

    def test_emitted_numbers_reparse_identically(self, tri_file, tmp_path):
        # emitted fuzzy-number JSON round-trips at distance exactly 0
        original = decode_fuzzy(read_json(tri_file))
        from fuzzymetrics.serialize import dumps, encode_fuzzy

        out = tmp_path / "echo.json"
        out.write_text(dumps(encode_fuzzy(original)))
        reparsed = decode_fuzzy(read_json(out))
        assert d_infty_sampled(original, reparsed) == 0.0
