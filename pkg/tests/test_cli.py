import json

import pytest

from stablyfree import __version__
from stablyfree.cli import CHECK_IDS, main


def _json(capsys, *argv):
    code = main(list(argv) + ["--json", "-"])
    return code, json.loads(capsys.readouterr().out)


def test_fifteen_checks_registered():
    assert len(CHECK_IDS) == 15 == len(set(CHECK_IDS))


def test_full_run_passes(capsys):
    code, report = _json(capsys, "all")
    assert code == 0
    assert [c["id"] for c in report["checks"]] == CHECK_IDS
    assert all(c["status"] == "pass" for c in report["checks"])
    distinct = next(c for c in report["checks"] if c["id"] == "distinctness")
    assert distinct["witness"]["distinct"] is True
    assert report["meta"] == {"field": "f2-rational", "u": "u", "seed": 0, "D": 6, "version": __version__}


def test_square_u_control(capsys):
    code, report = _json(capsys, "distinctness", "--field", "gf2:2:111", "--u", "w")
    assert code == 0
    (check,) = report["checks"]
    assert check["status"] == "pass"
    assert check["witness"]["distinct"] is False
    assert "u is a square" in check["witness"]["note"]


def test_chain_other_u(capsys):
    code, report = _json(capsys, "lemma-2.1-chain", "--u", "u+1")
    assert code == 0 and report["checks"][0]["status"] == "pass"


def test_empty_selector(capsys):
    code, report = _json(capsys, "")
    assert code == 0 and report["checks"] == []


def test_json_deterministic_and_round_trips(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    sel = "m0-sl2,norm-groups,pfister-relations"
    assert main([sel, "--json", str(a)]) == 0
    assert main([sel, "--json", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text(encoding="utf-8"))
    assert json.loads(json.dumps(report)) == report
    assert all(c["ms"] is None for c in report["checks"])


def test_timing_flag(capsys):
    _, report = _json(capsys, "m0-sl2", "--timing")
    assert isinstance(report["checks"][0]["ms"], float)


def test_text_table(capsys):
    assert main(["m0-sl2,h-extension"]) == 0
    out = capsys.readouterr().out
    assert "m0-sl2" in out and "2/2 passed" in out


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["all", "--u", "u+("], "position"),
        (["all", "--u", "1"], "must be units"),
        (["nope"], "unknown check"),
        (["all", "--field", "gf2:2:101"], "reducible"),
    ],
)
def test_bad_input(capsys, argv, needle):
    assert main(argv) == 2
    assert needle in capsys.readouterr().err


def test_finite_field_run(capsys):
    code, report = _json(capsys, "all", "--field", "gf2:3", "--u", "w")
    assert code == 0
    assert {c["status"] for c in report["checks"]} == {"pass"}
