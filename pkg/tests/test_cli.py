import csv
import io
import json

import pytest

from catalan_tr.cli import main
from catalan_tr.laplace import configure_store


@pytest.fixture(autouse=True)
def _reset_store(monkeypatch):
    monkeypatch.delenv("CATALAN_CACHE_DIR", raising=False)
    yield
    configure_store(None)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_examples(capsys):
    code, out, _ = run(capsys, "count", "--g", "1", "--n", "1", "--mu", "4")
    assert code == 0
    rec = json.loads(out)
    assert rec["C"] == "1" and rec["D"] == "1/4"
    assert json.loads(run(capsys, "count", "--g", "0", "--n", "1", "--mu", "6")[1])["C"] == "5"
    assert json.loads(run(capsys, "count", "--g", "0", "--n", "1", "--mu", "3")[1])["C"] == "0"


def test_count_zero_degree_has_no_D(capsys):
    rec = json.loads(run(capsys, "count", "--g", "0", "--mu", "0")[1])
    assert rec["C"] == "1" and rec["D"] is None


@pytest.mark.parametrize("argv", [
    ["count", "--g", "1", "--n", "2", "--mu", "4"],
    ["count", "--g", "1", "--mu", "a,b"],
    ["count", "--g", "-1", "--mu", "2"],
    ["transform", "--g", "0", "--n", "2"],
    ["verify", "--suite", "catalan", "--level", "bogus"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "catalan", "--jobs", "0"],
    ["wick", "--N", "0"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_resource_limits(capsys):
    assert run(capsys, "count", "--g", "0", "--mu", "2", "--budget", "17")[0] == 3
    assert run(capsys, "wick", "--N", "4")[0] == 3


def test_transform_specialize_intersections(capsys):
    rec = json.loads(run(capsys, "transform", "--g", "1", "--n", "1")[1])
    assert {"exp": [3], "coeff": "-1/384"} in rec["rows"]
    rec = json.loads(run(capsys, "specialize", "--g", "1", "--n", "1")[1])
    assert rec["rows"] == [{"exp": [2], "coeff": "1/4"}, {"exp": [3], "coeff": "-1/6"}]
    rec = json.loads(run(capsys, "intersections", "--g", "1", "--n", "1")[1])
    assert rec["rows"] == [{"d": [1], "value": "1/24"}]


@pytest.mark.parametrize("argv", [
    ["transform", "--g", "0", "--n", "4"],
    ["intersections", "--g", "1", "--n", "3"],
    ["specialize", "--g", "2", "--n", "1"],
    ["wick", "--N", "3"],
])
def test_json_and_csv_agree(capsys, argv):
    js = json.loads(run(capsys, *argv, "--format", "json")[1])["rows"]
    rows = list(csv.DictReader(io.StringIO(run(capsys, *argv, "--format", "csv")[1])))
    assert len(js) == len(rows)
    for j, c in zip(js, rows):
        for k, v in j.items():
            want = " ".join(str(x) for x in v) if isinstance(v, list) else str(v)
            assert c[k] == want


def test_warm_cache_output_is_identical(capsys, tmp_path):
    argv = ["transform", "--g", "1", "--n", "3", "--cache", str(tmp_path)]
    cold = run(capsys, *argv)[1]
    assert (tmp_path / "F_g1_n3.json").exists()
    configure_store(None)
    warm = run(capsys, *argv)[1]
    assert cold == warm
    configure_store(None)
    plain = run(capsys, "transform", "--g", "1", "--n", "3")[1]
    assert plain == cold


def test_cache_dir_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CATALAN_CACHE_DIR", str(tmp_path))
    assert run(capsys, "transform", "--g", "1", "--n", "1")[0] == 0
    assert (tmp_path / "F_g1_n1.json").exists()


def test_verify_eo_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "eo", "--level", "2")
    assert code == 0
    rec = json.loads(out)
    assert rec["pass"] is True
    cells = {(r["g"], r["n"]) for r in rec["rows"]}
    assert cells == {(0, 3), (1, 1), (0, 4), (1, 2)}


def test_verify_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "--suite", "eo", "--level", "2")[1]
    parallel = run(capsys, "verify", "--suite", "eo", "--level", "2", "--jobs", "2")[1]
    assert serial == parallel


def test_verify_failure_exit_code(capsys, monkeypatch):
    from catalan_tr import suites

    def broken(level=3):
        rep = suites.SuiteReport("schrodinger")
        rep.add("forced", False)
        return rep

    monkeypatch.setattr(suites, "schrodinger_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "schrodinger")
    assert code == 1
    assert json.loads(out)["pass"] is False
