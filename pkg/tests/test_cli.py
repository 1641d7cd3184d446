import json

import pytest

from mihailova.cli import main
from mihailova.oracles import s3_twelve_presentation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def twelve(tmp_path):
    path = tmp_path / "h12.json"
    path.write_text(json.dumps(s3_twelve_presentation().to_json()))
    return str(path)


@pytest.fixture
def swap_file(tmp_path):
    path = tmp_path / "swap.json"
    path.write_text(json.dumps({"dim": 4, "rows": [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]}))
    return str(path)


def test_gens(capsys, twelve):
    code, out = run(capsys, "gens", "--presentation", twelve)
    assert code == 0 and len(out["generators"]) == 14


def test_member_exit_codes(capsys):
    assert run(capsys, "member", "--left", "x1", "--right", "x2")[0] == 3
    code, out = run(capsys, "member", "--left", "x1 x1")
    assert code == 0 and out["member"] is True


def test_express(capsys):
    code, out = run(capsys, "express", "--right", "x1 x2^3 x1^-1")
    assert code == 0 and out["symbol_word"] == "h1 h4 h1^-1"
    assert run(capsys, "express", "--left", "x1", "--right", "x2")[0] == 3
    code, out = run(capsys, "express", "--right", "x1^2 x2^3 x1 x2 x1 x2 x1^2 x2^3", "--depth", "1")
    assert code == 2 and out["found"] is False


def test_emit_iso_instance(capsys, twelve, tmp_path):
    code, out = run(capsys, "emit-iso-instance", "--presentation", twelve, "--symbol-word", "h1 h14",
                    "--target-shape", "f15", "--write-files", str(tmp_path / "inst"))
    assert code == 0
    t1 = out["theorem1"]
    assert t1["shape"] == "Z^4 x| F_15"
    for key in ("G_h", "G_1"):
        assert len(t1[key]["generators"]) == 19 and len(t1[key]["relators"]) == 66
        assert json.loads((tmp_path / "inst" / f"{key}.json").read_text()) == t1[key]
    assert run(capsys, "emit-iso-instance", "--symbol-word", "h1", "--target-shape", "f15")[0] == 1


def test_emit_conj_instance(capsys, tmp_path):
    code, out = run(capsys, "emit-conj-instance", "--left", "x1", "--right", "x1",
                    "--write-files", str(tmp_path))
    assert code == 0
    t2 = out["theorem2"]
    assert len(t2["with_h"]) == 6 and len(t2["without_h"]) == 5
    saved = json.loads((tmp_path / "subset_with_h.json").read_text())
    assert saved == t2["with_h"] and saved[0]["dim"] == 4


def test_iso_witness_and_verify(capsys, tmp_path):
    code, out = run(capsys, "iso-witness", "--symbol-word", "h1 h2")
    assert code == 0 and out["forward"]["images"]["t"] == "t1 t2 t"
    assert out["backward"]["images"]["t"] == "t2^-1 t1^-1 t"
    code, cert = run(capsys, "verify", "--symbol-word", "h1 h2")
    assert code == 0 and cert["ok"]
    bad = out["forward"]
    bad["images"]["t"] = "t1 t"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, res = run(capsys, "verify", "--symbol-word", "h1 h2", "--witness", str(path))
    assert code == 3 and res["violated_relators"]


def test_planes(capsys, tmp_path):
    code, out = run(capsys, "planes")
    assert code == 0 and out["lambdas"] == ["0/1", "inf"]
    code, out = run(capsys, "planes", "--delta-only")
    assert out["family"] is True
    path = tmp_path / "m.json"
    path.write_text(json.dumps([{"dim": 4, "rows": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}]))
    code, out = run(capsys, "planes", "--matrices", str(path))
    assert code == 1 and out["error"] == "UnsupportedInputError"


def test_power(capsys, swap_file):
    code, out = run(capsys, "power", "--matrix", swap_file)
    assert code == 0 and out["k"] == 2


def test_pipelines(capsys, swap_file, tmp_path):
    code, out = run(capsys, "pipeline-lemma2", "--symbol-word", "h2 h3^-1")
    assert code == 0 and out["status"] == "consistent"
    code, out = run(capsys, "pipeline-lemma2", "--left", "x1", "--right", "x2")
    assert code == 3 and out["member"] is False
    ident = tmp_path / "id.json"
    ident.write_text(json.dumps({"rows": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}))
    code, out = run(capsys, "pipeline-3to1", "--symbol-word", "h1", "--conjugator", str(ident))
    assert code == 0 and out["verdict"] == "h in L"
    code, out = run(capsys, "pipeline-3to1", "--symbol-word", "h1", "--conjugator", swap_file)
    assert code == 0 and out["decomposition"] == "swaps" and out["power"]["k"] == 2
    code, out = run(capsys, "pipeline-3to1", "--left", "x1", "--right", "x2", "--conjugator", swap_file)
    assert code == 3 and out["status"] == "refuted"
    slow = tmp_path / "slow.json"
    slow.write_text(json.dumps({"rows": [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}))
    code, out = run(capsys, "pipeline-3to1", "--symbol-word", "h1", "--conjugator", str(slow), "--power-bound", "2")
    assert code == 2 and out["status"] == "inconclusive"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 1
    assert run(capsys, "member", "--left", "q")[0] == 1
    assert run(capsys, "pipeline-lemma2")[0] == 1


def test_pretty(capsys):
    main(["gens", "--pretty"])
    assert capsys.readouterr().out.startswith("{\n  ")
