import json

from click.testing import CliRunner

from solvsph.cli import main
from solvsph.combdata import make_triple, triple_from_json

A2_LONG = '{"system": "A2", "M": [{"root": [1, 1], "pi": 0}], "classes": [[0]]}'
A3_PAIR = ('{"system": "A3", "M": [{"root": [0, 1, 1], "pi": 1}, '
           '{"root": [1, 1, 0], "pi": 1}], "classes": [[0, 1]]}')


def run(*args, **kw):
    return CliRunner().invoke(main, list(args), **kw)


def test_counts():
    res = run("counts", "F4")
    assert res.exit_code == 0
    assert res.output.strip() == "d0=38 d=87"


def test_roots_text():
    res = run("roots", "--system", "A2")
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert "1\t0" in lines and "1\t1" in lines


def test_roots_json():
    res = run("roots", "--system", "B2", "--format", "json")
    data = json.loads(res.output)
    assert data["system"] == "B2"
    assert len(data["positive_roots"]) == 4
    assert any(abs(e["n"]) == 2 for e in data["structure_constants"])


def test_validate_ok_and_fail():
    assert run("validate", A2_LONG).exit_code == 0
    bad = json.loads(A3_PAIR)
    bad["classes"] = [[0], [1]]      # shared pi without equivalence
    res = run("validate", json.dumps(bad))
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_validate_reads_stdin():
    res = run("validate", input=A2_LONG)
    assert res.exit_code == 0


def test_build_reports_the_model():
    res = run("build", A3_PAIR)
    assert res.exit_code == 0
    assert "classes=2 dim_n=4 closed=True spherical=True" in res.output
    res = run("build", A3_PAIR, "--format", "json")
    data = json.loads(res.output)
    assert data["closed"] and data["spherical"]
    assert [1, -1] in data["xi"]


def test_transform_round_trip():
    res = run("transform", A2_LONG, "--center", "1")
    assert res.exit_code == 0
    t2 = triple_from_json(res.output)
    assert t2 == make_triple("A2", [((1, 0), 0), ((0, 1), 1)])
    back = run("transform", res.output, "--center", "1")
    assert triple_from_json(back.output) == triple_from_json(A2_LONG)


def test_transform_rejects_inactive_center():
    res = run("transform", A2_LONG, "--center", "0")
    assert res.exit_code == 1


def test_orbit():
    res = run("orbit", A2_LONG)
    data = json.loads(res.output)
    assert len(data["nodes"]) == 3
    assert data["orbits"] == [[0, 1, 2]]


def test_enumerate_streams_json_lines(tmp_path):
    res = run("enumerate", "--system", "B2")
    lines = [json.loads(l) for l in res.output.splitlines()]
    assert len(lines) == 4
    assert all({"system", "M", "classes", "c_s", "c_n"} <= set(l)
               for l in lines)
    out = tmp_path / "cat.jsonl"
    res = run("enumerate", "--system", "B2", "--output", str(out))
    assert res.exit_code == 0
    assert len(out.read_text().splitlines()) == 4


def test_table_matches_counts():
    res = run("table", "--system", "A2", "--system", "B2", "--system", "G2")
    assert res.exit_code == 0
    last = res.output.strip().splitlines()[-1].split()
    assert last == ["d0", "2", "3", "3"]


def test_usage_errors_exit_2():
    assert run("counts").exit_code == 2
    assert run("nonsense").exit_code == 2
