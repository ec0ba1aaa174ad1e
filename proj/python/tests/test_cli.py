import json
import subprocess

import jsonschema
import pytest


def run(cli, *args, cwd=None):
    return subprocess.run([cli, *args], capture_output=True, text=True, cwd=cwd)


def validate(doc, name, schemas):
    loaded, registry = schemas
    jsonschema.Draft202012Validator(loaded[name], registry=registry).validate(doc)


@pytest.fixture
def c2(cli, tmp_path):
    path = tmp_path / "c2.txt"
    assert run(cli, "build", "--family", "seed", "--i", "2", "--out", str(path)).returncode == 0
    return path


def test_verify_report(cli, c2, schemas):
    res = run(cli, "verify", "--in", str(c2), "--checks", "distance,params:4,3,1,bounded:3,singleton")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    validate(report, "report", schemas)
    assert report["pass"] and report["params"]["d_source"] == "verified"


def test_verify_failed_check(cli, c2, schemas):
    res = run(cli, "verify", "--in", str(c2), "--checks", "params:4,3,2")
    assert res.returncode == 1
    validate(json.loads(res.stdout), "report", schemas)


def test_verify_io_and_dependent(cli, tmp_path):
    assert run(cli, "verify", "--in", str(tmp_path / "missing"), "--checks", "distance").returncode == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2 4 3\n0 1 1 1\n0 0 0 0\n1 1 0 1\n")
    res = run(cli, "verify", "--in", str(bad), "--checks", "distance")
    assert res.returncode == 2 and "DependentBasis" in res.stderr


def test_construct_report(cli, c2, tmp_path, schemas):
    out = tmp_path / "b25.txt"
    res = run(cli, "construct", "--in", str(c2), "--steps", "5", "--out", str(out))
    assert res.returncode == 0
    report = json.loads(res.stdout)
    validate(report, "report", schemas)
    exact = [c for c in report["checks"] if c["name"] == "exact_distance"]
    assert exact and exact[0]["actual"] == 6720
    assert out.read_text().startswith("2 26880 8\n")


def test_params_only_build(cli, schemas):
    res = run(cli, "build", "--family", "series", "--i", "2")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    validate(doc, "params", schemas)
    assert doc["materialized"] is False and doc["kd_over_n"] == "4"


def test_growth_json(cli, schemas):
    for family, extra in [("rm-third", ["--max-index", "30"]), ("seed-series", ["--max-index", "3"]),
                          ("seed-family", ["--min-index", "0", "--max-index", "5"])]:
        res = run(cli, "growth", "--family", family, "--format", "json", *extra)
        assert res.returncode == 0, res.stderr
        validate(json.loads(res.stdout), "growth", schemas)


def test_exit_codes(cli):
    assert run(cli, "seed-matrix", "--i", "0").returncode == 2
    assert run(cli, "growth", "--family", "nope").returncode == 2
    assert run(cli, "build", "--family", "family", "--i", "2", "--j", "6").returncode == 2
