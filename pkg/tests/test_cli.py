import json

import jsonschema
import pytest

from tournaments.catalog import build_named
from tournaments.cli import dispatch, main
from tournaments.io import write
from tournaments.schemas import SMOOTH_SPEC, report_schema


def run(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    return code, doc


def check(doc, key):
    jsonschema.validate(doc, report_schema(key))
    assert json.loads(json.dumps(doc)) == doc


def test_ramsey(capsys):
    code, doc = run(capsys, "ramsey", "--k", "3")
    check(doc, "ramsey")
    assert code == 0 and doc["status"] == "pass" and doc["payload"]["holds"]


def test_prime_k6(capsys):
    code, doc = run(capsys, "prime", "catalog:K6")
    check(doc, "prime")
    assert code == 0 and doc["payload"]["prime"] is True


def test_contains_c5_in_l1(capsys):
    code, doc = run(capsys, "contains", "catalog:L1", "catalog:C5")
    check(doc, "contains")
    assert doc["payload"]["witness"] == [0, 1, 2, 3, 4]


def test_galaxy_and_backward(capsys):
    code, doc = run(capsys, "galaxy", "catalog:S1")
    check(doc, "galaxy")
    assert doc["payload"] == {"galaxy": False, "ordering": None}
    code, doc = run(capsys, "galaxy", "catalog:H1^c")
    check(doc, "galaxy")
    code, doc = run(capsys, "backward", "catalog:S1", "--theta", "3,5,6,0,1,4,2")
    check(doc, "backward")
    assert doc["payload"]["backward_arcs"] == [[6, 3], [1, 3], [4, 5], [4, 0], [2, 3]]


def test_tr(capsys, tmp_path):
    code, doc = run(capsys, "tr", "catalog:S15")
    check(doc, "tr")
    assert doc["payload"]["exact"]
    code, doc = run(capsys, "tr", "catalog:S15", "--subset", "0,1,2", "--approx")
    check(doc, "tr")
    assert not doc["payload"]["exact"]


def test_catalog_commands(capsys):
    code, doc = run(capsys, "catalog", "list")
    check(doc, "catalog list")
    assert len(doc["payload"]["ids"]) == 89
    code, doc = run(capsys, "catalog", "show", "C5")
    check(doc, "catalog show")
    assert doc["payload"]["trn"].startswith("5\n")
    code, doc = run(capsys, "catalog", "verify")
    check(doc, "catalog verify")
    assert code == 0 and doc["findings"] == len(doc["payload"]["corrections"])


def test_landscape_commands(capsys, tmp_path):
    code, doc = run(capsys, "landscape", "counts", "--max-n", "6")
    check(doc, "landscape counts")
    assert doc["payload"]["counts"]["6"] == 56
    path = tmp_path / "land.json"
    assert main(["landscape", "run", "--json", str(path)]) == 0
    assert "coverage: 100%" in capsys.readouterr().out
    check(json.loads(path.read_text()), "landscape run")


def test_smooth(capsys, tmp_path):
    spec = {"c": "1/4", "lambda": "1/10", "w": [1, 0], "sets": [[0, 1], [2, 3, 4]]}
    jsonschema.validate(spec, SMOOTH_SPEC)
    (tmp_path / "s.json").write_text(json.dumps(spec))
    write(build_named("R1"), tmp_path / "t.trn")
    tt = tmp_path / "tt.trn"
    tt.write_text("5\n1111111111\n")
    code, doc = run(capsys, "smooth", str(tt), str(tmp_path / "s.json"),
                    "--intersection", "1", "--sstar", "2,3", "--A", "0")
    check(doc, "smooth")
    assert code == 0 and doc["payload"]["valid"] and doc["payload"]["intersection"]["holds"]
    code, doc = run(capsys, "smooth", str(tmp_path / "t.trn"), str(tmp_path / "s.json"))
    check(doc, "smooth")
    assert code == 1 and doc["status"] == "fail" and doc["payload"]["violations"]


def test_search(capsys, tmp_path):
    out = tmp_path / "best.trn"
    code, doc = run(capsys, "search", "--n", "8", "--forbid", "C5", "--seed", "2",
                    "--steps", "200", "--restarts", "2", "--out", str(out))
    check(doc, "search")
    assert code == 0 and doc["payload"]["free_certificate"]
    assert out.read_text().splitlines()[1] == doc["payload"]["orientation"]


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.trn"
    bad.write_text("3\n01x\n")
    assert main(["tr", str(bad)]) == 2
    assert "bad.trn:2:3" in capsys.readouterr().err
    assert main(["prime", "catalog:Nope"]) == 2
    assert main(["tr", str(tmp_path / "missing.trn")]) == 2
    assert main(["search", "--n", "4", "--forbid", "S1"]) == 2
    assert main(["ramsey", "--k", "7"]) == 2
    with pytest.raises(SystemExit):
        dispatch(["frobnicate"])
    assert main(["frobnicate"]) == 2
    assert main([]) == 2


def test_human_output(capsys):
    assert main(["prime", "catalog:R1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("false") and "homogeneous 0 1 2 3 4 5" in out
