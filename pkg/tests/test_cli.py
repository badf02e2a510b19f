from __future__ import annotations

import json

import pytest

from conftest import fixtures
from dessinsym.cli import census, construct, main
from dessinsym.errors import ConstructionError, NotRegular, ParseError
from dessinsym.io import ReportRecord, build_record, dessin_from_dict, dessin_to_dict, load_dessin, save_dessin


def write(tmp_path, name, payload) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_load_c3(tmp_path):
    D = load_dessin(write(tmp_path, "c3.json", {"degree": 3, "x": [1, 2, 0], "y": [2, 0, 1]}))
    assert D.order == 3 and D.type.l == 3


def test_load_not_regular(tmp_path):
    with pytest.raises(NotRegular):
        load_dessin(write(tmp_path, "bad.json", {"degree": 4, "x": [1, 0, 3, 2], "y": [1, 0, 2, 3]}))


@pytest.mark.parametrize("payload", [
    {"degree": 3, "x": [1, 2, 0], "y": [2, 0]},
    {"degree": 3, "x": [1, 2, 0], "y": [2, 0, 0]},
    {"degree": 3, "x": [1, 2, 0], "y": "201"},
    {"degree": 3, "x": [1, 2, 0], "y": [2, 0, 1], "colour": 1},
    {"degree": 0, "x": [], "y": []},
    [1, 2, 3],
])
def test_load_malformed(tmp_path, payload):
    with pytest.raises(ParseError):
        load_dessin(write(tmp_path, "m.json", payload))


def test_load_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{degree: 3")
    with pytest.raises(ParseError):
        load_dessin(str(path))


@pytest.mark.parametrize("name", tuple(fixtures()))
def test_save_load_round_trip(tmp_path, name):
    D = fixtures()[name]
    path = tmp_path / "d.json"
    save_dessin(D, path)
    E = load_dessin(path)
    assert E == D and E.name == D.name


@pytest.mark.parametrize("name", ["exceptional3", "torus44", "klein21", "c4"])
def test_report_record_round_trip(name):
    rec = build_record(fixtures()[name])
    text = json.dumps(rec.to_dict())
    assert ReportRecord.from_dict(json.loads(text)) == rec


def test_exit_codes(tmp_path, capsys):
    good = write(tmp_path, "g.json", {"degree": 3, "x": [1, 2, 0], "y": [2, 0, 1]})
    bad = write(tmp_path, "b.json", {"degree": 4, "x": [1, 0, 3, 2], "y": [1, 0, 2, 3]})
    broken = write(tmp_path, "p.json", {"degree": 3})
    assert main(["info", good]) == 0
    assert main(["info", broken]) == 1
    assert main(["info", bad]) == 2
    assert main(["generate", "biggs:6"]) == 3
    assert main(["generate", "nonsense"]) == 3
    assert main(["classify", good, bad, broken]) == 2
    capsys.readouterr()


def test_construct_errors():
    with pytest.raises(ConstructionError):
        construct("biggs:x")
    with pytest.raises(ConstructionError):
        construct("join:v4")


def classify(tmp_path, capsys, name, *flags):
    path = tmp_path / f"{name}.json"
    save_dessin(fixtures()[name], path)
    code = main(["classify", str(path), *flags])
    return code, capsys.readouterr()


def test_classify_exceptional(tmp_path, capsys):
    code, out = classify(tmp_path, capsys, "exceptional3")
    assert code == 0
    [rec] = json.loads(out.out)
    assert rec["symmetric"] and ReportRecord.from_dict(rec).holding() == ["c3"]
    c3 = rec["conditions"]["c3"]
    assert c3["gamma"] is not None and c3["delta"] is not None
    assert "row-a@0" in rec["growth"]


def test_classify_torus(tmp_path, capsys):
    code, out = classify(tmp_path, capsys, "torus44")
    [rec] = json.loads(out.out)
    assert code == 0 and rec["symmetric"] and rec["conditions"]["c4"]["holds"]
    assert not rec["conditions"]["c1"]["holds"] and not rec["conditions"]["c2"]["holds"]


def test_classify_torus_maximal_rejected(tmp_path, capsys):
    code, out = classify(tmp_path, capsys, "torus44", "--maximal")
    assert code == 1
    assert "IncompatibleHypothesis" in out.err


def test_classify_table(tmp_path, capsys):
    code, out = classify(tmp_path, capsys, "biggs8", "--table")
    assert code == 0
    header, row = out.out.splitlines()
    assert header.split()[:4] == ["name", "degree", "type", "genus"]
    assert row.split()[:4] == ["biggs:8", "56", "(7,2,7)", "7"]


@pytest.mark.parametrize("spec, degree", [("exceptional:3", 112), ("biggs:8", 56), ("klein21", 21),
                                          ("join:biggs:8+v4", 224), ("torus:36:21", 42)])
def test_generate(tmp_path, spec, degree):
    out = tmp_path / "out.json"
    assert main(["generate", spec, "-o", str(out)]) == 0
    D = load_dessin(out)
    assert D.degree == degree and D.name == spec


def test_structural_commands(tmp_path, capsys):
    path = tmp_path / "b.json"
    save_dessin(fixtures()["exceptional3"], path)
    assert main(["walsh", str(path)]) == 0
    w = json.loads(capsys.readouterr().out)
    assert w["orientation_preserving_automorphisms"] == 224 and w["faces"] == 16
    assert main(["grow", str(path)]) == 0
    grown = json.loads(capsys.readouterr().out)
    assert [g["degree"] for g in grown] == [224]
    assert main(["dual", str(path), "--which", "02"]) == 0
    assert dessin_from_dict(json.loads(capsys.readouterr().out)).type == (7, 14, 14)
    assert main(["mirror", str(path)]) == 0
    assert dessin_from_dict(json.loads(capsys.readouterr().out)).genus == 41
    assert main(["table1", "7", "7", "7"]) == 0
    labels = [line.split()[0] for line in capsys.readouterr().out.splitlines()]
    assert labels == ["a", "b", "c", "A"]


EXPECTED_CENSUS = {
    "records": 15,
    "errors": 0,
    "symmetric": 15,
    "not_symmetric": 0,
    "reflexible": 7,
    "chiral": 8,
    "chiral_symmetric": 8,
    "degenerate": 2,
    "by_condition": {"c1": 7, "c2": 10, "c3": 2, "c4": 6},
    "sole_condition": {"c1": 0, "c2": 3, "c3": 1, "c4": 4},
}


def test_census_over_fixtures():
    raw = [dessin_to_dict(D) for D in fixtures().values()]
    assert census(raw) == EXPECTED_CENSUS


def test_census_parallel_byte_identical(tmp_path, capsys):
    path = tmp_path / "all.json"
    save_dessin(list(fixtures().values()), path)
    outputs = []
    for k in ("1", "2", "3"):
        assert main(["census", str(path), "--parallel", k]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]
    assert json.loads(outputs[0]) == EXPECTED_CENSUS


def test_census_empty(tmp_path, capsys):
    assert main(["census", write(tmp_path, "e.json", [])]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["records"] == 0 and summary["symmetric"] == 0


def test_census_duplicates_and_errors():
    rec = dessin_to_dict(fixtures()["klein21"])
    summary = census([rec, rec, {"degree": 2}])
    assert summary["records"] == 3 and summary["errors"] == 1
    assert summary["by_condition"]["c2"] == 2
