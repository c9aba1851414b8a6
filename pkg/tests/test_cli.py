import csv
import io
import json

import pytest
from click.testing import CliRunner

from pseudoconvex.cli import EXIT_INPUT, EXIT_OK, EXIT_UNVERIFIED, digest, main, run
from pseudoconvex.fixtures import BRANCH_FIXTURES
from pseudoconvex.pointgen import GenSpec, format_points, generate


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def pts13(tmp_path):
    path = tmp_path / "p13.txt"
    path.write_text(format_points(generate(GenSpec("uniform", 13, 3))))
    return path


class TestGen:
    def test_matches_library(self, runner):
        r = runner.invoke(main, ["gen", "--kind", "fixed_hull_size", "--hull", "6", "--seed", "2"])
        assert r.exit_code == EXIT_OK
        assert r.stdout == format_points(generate(GenSpec("fixed_hull_size", 13, 2, hull=6)))

    def test_profile_and_fixture(self, runner):
        r = runner.invoke(main, ["gen", "--kind", "fixed_layer_profile", "--profile", "6,5,2"])
        assert r.exit_code == EXIT_OK and r.stdout.startswith("13\n")
        r = runner.invoke(main, ["gen", "--kind", "fixture", "--name", "hull13.arcs"])
        assert r.exit_code == EXIT_OK

    def test_bad_spec_is_input_error(self, runner):
        assert runner.invoke(main, ["gen", "--kind", "fixed_hull_size", "--hull", "2"]).exit_code == EXIT_INPUT
        assert runner.invoke(main, ["gen", "--kind", "fixture", "--name", "missing"]).exit_code == EXIT_INPUT


class TestPartition:
    def test_partition13(self, runner, pts13, tmp_path):
        out = tmp_path / "parts.json"
        r = runner.invoke(main, ["partition13", str(pts13), "--out", str(out)])
        assert r.exit_code == EXIT_OK
        doc = json.loads(out.read_text())
        assert doc["verified"] and doc["n"] == 13 and len(doc["parts"]) <= 3

    def test_partition13_wrong_size(self, runner, tmp_path):
        p = tmp_path / "p.txt"
        p.write_text(format_points(generate(GenSpec("uniform", 12, 0))))
        assert runner.invoke(main, ["partition13", str(p)]).exit_code == EXIT_INPUT

    def test_collinear_input(self, runner, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("3\n0 0\n1 1\n2 2\n")
        r = runner.invoke(main, ["partition", str(p)])
        assert r.exit_code == EXIT_INPUT
        assert "bad.txt" in r.stderr

    def test_missing_file(self, runner, tmp_path):
        assert runner.invoke(main, ["partition", str(tmp_path / "nope.txt")]).exit_code == EXIT_INPUT

    def test_partition_any_from_stdin(self, runner):
        text = format_points(generate(GenSpec("uniform", 40, 1)))
        r = runner.invoke(main, ["partition", "-"], input=text)
        assert r.exit_code == EXIT_OK
        doc = json.loads(r.stdout)
        assert doc["verified"] and len(doc["parts"]) <= 10
        assert len(doc["cut_lines"]) == 3 and doc["direction"] == [1, 0]


class TestVerify:
    def _parts(self, runner, pts13, tmp_path):
        out = tmp_path / "parts.json"
        runner.invoke(main, ["partition13", str(pts13), "--out", str(out)])
        return out

    def test_ok(self, runner, pts13, tmp_path):
        r = runner.invoke(main, ["verify", str(self._parts(runner, pts13, tmp_path))])
        assert r.exit_code == EXIT_OK and r.stdout.startswith("ok:")

    def test_tampered_point(self, runner, pts13, tmp_path):
        path = self._parts(runner, pts13, tmp_path)
        doc = json.loads(path.read_text())
        # drop one point from its part: coverage fails
        part = max(doc["parts"], key=lambda p: len(p["members"]))
        victim = part["members"].pop()
        if part.get("polygon"):
            part["polygon"].remove(victim)
        path.write_text(json.dumps(doc))
        r = runner.invoke(main, ["verify", str(path)])
        assert r.exit_code == EXIT_UNVERIFIED
        assert r.stdout.strip()

    def test_garbage(self, runner, tmp_path):
        p = tmp_path / "g.json"
        p.write_text("{not json")
        assert runner.invoke(main, ["verify", str(p)]).exit_code == EXIT_INPUT


class TestOracleCommand:
    def test_value(self, runner, tmp_path):
        p = tmp_path / "p8.txt"
        p.write_text(format_points(generate(GenSpec("uniform", 8, 2))))
        r = runner.invoke(main, ["oracle", str(p), "--degenerate", "--max-parts", "2"])
        assert r.exit_code == EXIT_OK
        doc = json.loads(r.stdout)
        assert doc["value"] <= 2 and doc["verified"]

    def test_budget_exhausted(self, runner, pts13):
        r = runner.invoke(main, ["oracle", str(pts13), "--node-limit", "5"])
        assert r.exit_code == EXIT_UNVERIFIED


class TestRender:
    def test_byte_stable(self, runner, tmp_path):
        p = tmp_path / "p.txt"
        p.write_text(format_points(generate(GenSpec("uniform", 30, 4))))
        parts = tmp_path / "parts.json"
        svg1 = tmp_path / "a.svg"
        assert runner.invoke(main, ["partition", str(p), "--out", str(parts), "--svg", str(svg1)]).exit_code == 0
        r = runner.invoke(main, ["render", str(parts)])
        assert r.exit_code == EXIT_OK
        assert r.stdout == svg1.read_text()
        assert r.stdout == runner.invoke(main, ["render", str(parts)]).stdout
        assert "<svg" in r.stdout and "stroke-dasharray" in r.stdout


class TestSweep:
    def test_csv_and_histogram(self, runner, tmp_path):
        out = tmp_path / "runs.csv"
        r = runner.invoke(main, ["sweep", "--count", "5", "--fixtures", "--out", str(out)])
        assert r.exit_code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert len(rows) == 5 + len(BRANCH_FIXTURES)
        assert [int(x["seed"]) for x in rows] == sorted(int(x["seed"]) for x in rows)
        fx = {x["source"]: x["branch"] for x in rows if int(x["seed"]) < 0}
        assert fx == {name: name for name in BRANCH_FIXTURES}
        assert "runs=%d unverified=0 fallback=0" % len(rows) in r.stderr

    def test_digest_column(self, runner):
        r = runner.invoke(main, ["sweep", "--count", "2", "--n", "20", "--seed", "7"])
        rows = list(csv.DictReader(io.StringIO(r.stdout)))
        assert rows[0]["digest"] == digest(generate(GenSpec("uniform", 20, 7)))
        assert rows[0]["command"] == "partition"

    def test_parallel_matches_serial(self, runner):
        a = runner.invoke(main, ["sweep", "--count", "6"]).stdout
        b = runner.invoke(main, ["sweep", "--count", "6", "--jobs", "2"]).stdout
        strip = lambda t: [r[:-1] for r in csv.reader(io.StringIO(t))]  # noqa: E731  (wall time differs)
        assert strip(a) == strip(b)


def test_run_returns_exit_codes(tmp_path, capsys):
    p = tmp_path / "p.txt"
    p.write_text("2\n0 0\n")
    assert run(["partition", str(p)]) == EXIT_INPUT
    p.write_text(format_points(generate(GenSpec("uniform", 13, 0))))
    assert run(["partition13", str(p), "--out", str(tmp_path / "o.json")]) == EXIT_OK
