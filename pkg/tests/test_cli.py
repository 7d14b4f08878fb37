import json

import pytest
from hypothesis import given

from conftest import build, facet_lists, named
from srtool.cli import main
from srtool.documents import document_from_complex, loads_document, loads_manifest
from srtool.errors import ParseError


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.fixture
def c4_file(tmp_path):
    return write(tmp_path, "c4.json", document_from_complex(named("C4"), "C4").dumps())


def test_betti_command(c4_file, capsys):
    assert main(["betti", c4_file, "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert "1 2 2" in out.splitlines() and "2 4 1" in out.splitlines()


def test_betti_json_and_cap(c4_file, capsys):
    assert main(["betti", c4_file, "--json", "--cap", "2", "--jobs", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["entries"] == [[0, 0, 1], [1, 2, 2]] and data["cap"] == 2


def test_cap_too_small_is_an_error(c4_file, capsys):
    assert main(["betti", c4_file, "--cap", "1", "--jobs", "1"]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "CapTooSmall" and "ground_set" in err["document"]


def test_sd_and_conjecture(tmp_path, capsys):
    edge = write(tmp_path, "edge.json", document_from_complex(named("edge"), "edge").dumps())
    out = str(tmp_path / "sd.json")
    assert main(["sd", edge, "--out", out]) == 0
    assert loads_document(open(out).read()).to_complex().n == 3
    assert main(["conjecture", edge, "--subdivide", "--json", "--jobs", "1"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["equality_upper"] and rep["equality_lower"] and rep["is_pure"] and rep["e"] == 2


def test_invariants_command(c4_file, capsys):
    assert main(["invariants", c4_file, "--field", "p", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["depth"] == 2


def test_parse_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", '{"schema_version": "1", "ground_set": ["a"], "facets": [["b"]]}')
    assert main(["invariants", bad]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "ParseError"
    with pytest.raises(ParseError):
        loads_document("[1, 2]")
    with pytest.raises(ParseError):
        loads_document('{"schema_version": "9", "ground_set": [], "facets": []}')
    with pytest.raises(ParseError):
        loads_manifest('{"bogus": 1}')


def test_sweep_three_vertices_passes(tmp_path, capsys):
    man = write(tmp_path, "m.json", '{"max_vertices": 3}')
    reports = str(tmp_path / "r.jsonl")
    assert main(["sweep", man, "--jobs", "1", "--out", reports]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["complexes"] == 1 + 2 + 9 and summary["failures"] == []
    assert len(open(reports).read().splitlines()) == 2 * 12


def test_sweep_failure_list(tmp_path, capsys):
    man = write(tmp_path, "m.json", '{"max_vertices": 3, "budget": 5, "checks": ["conjecture"], "fields": ["q"]}')
    assert main(["sweep", man, "--jobs", "1"]) == 1
    summary = json.loads(capsys.readouterr().out)
    assert summary["failures"]
    first = summary["failures"][0]
    assert "BudgetExceeded" in first["messages"][0]
    assert loads_document(json.dumps(first["document"])).to_complex().n == 3


def test_sweep_output_independent_of_jobs(tmp_path, capsys):
    man = write(tmp_path, "m.json", '{"max_vertices": 3, "fields": ["q"]}')
    main(["sweep", man, "--jobs", "1"])
    one = capsys.readouterr().out
    main(["sweep", man, "--jobs", "2"])
    assert capsys.readouterr().out == one


@given(facet_lists(max_vertices=6, max_facets=5))
def test_canonical_round_trip(data):
    doc = document_from_complex(build(*data), "x")
    text = doc.dumps()
    assert loads_document(text).canonical().dumps() == text
    assert loads_document(text).to_complex() == build(*data)
