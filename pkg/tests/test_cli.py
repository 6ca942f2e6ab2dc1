import io
import json
import pathlib
import subprocess
import sys

import pytest

import worked_example as W
from asmtour.cli import run
from asmtour.enumeration import enumerate_ocmt, standard
from asmtour.tournament import Tournament

DATA = pathlib.Path(__file__).parent / "data"


def call(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin if isinstance(stdin, str) else json.dumps(stdin)))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_convert_asm_cmt_colsum(capsys, monkeypatch):
    code, out, _ = call(capsys, monkeypatch, ["convert", "--from", "asm", "--to", "cmt"], {"n": 5, "rows": W.ASM})
    assert code == 0 and json.loads(out)["rows"] == W.CMT
    code, out, _ = call(capsys, monkeypatch, ["convert", "--from", "asm", "--to", "colsum"], {"n": 5, "rows": W.ASM})
    assert json.loads(out)["rows"] == W.COLSUM
    code, out, _ = call(capsys, monkeypatch, ["convert", "--from", "cmt", "--to", "asm"], {"n": 5, "rows": W.CMT})
    assert json.loads(out)["rows"] == W.ASM


def test_convert_tournament_triangle(capsys, monkeypatch):
    tour = Tournament.from_edges(5, W.TOURNAMENT_EDGES).to_json()
    code, out, _ = call(capsys, monkeypatch, ["convert", "--from", "tournament", "--to", "triangle"], tour)
    assert code == 0 and json.loads(out)["rows"] == W.TOURNAMENT_TRIANGLE
    code, out, _ = call(capsys, monkeypatch, ["convert", "--from", "triangle", "--to", "tournament"], json.loads(out))
    assert json.loads(out) == tour


def test_convert_unsupported_pair(capsys, monkeypatch):
    code, _, err = call(capsys, monkeypatch, ["convert", "--from", "asm", "--to", "tournament"], {"n": 1, "rows": [[1]]})
    assert code == 2 and "no conversion" in err


def test_ice(capsys, monkeypatch):
    code, out, _ = call(capsys, monkeypatch, ["ice"], {"n": 5, "rows": W.ASM})
    assert code == 0
    assert json.loads(out)["types"] == W.ICE_TYPES


def test_orient(capsys, monkeypatch):
    code, out, _ = call(capsys, monkeypatch, ["orient"], {"n": 5, "rows": W.CMT})
    got = [t["rows"] for t in json.loads(out)]
    assert len(got) == 4 and W.OCMT in got


def test_phi_with_text_trace(capsys, monkeypatch):
    code, out, err = call(capsys, monkeypatch, ["phi", "--trace", "text"], {"rows": W.OCMT})
    assert code == 0
    assert Tournament.from_json(json.loads(out)) == Tournament.from_edges(5, W.TOURNAMENT_EDGES)
    assert err.startswith("start\n")


def test_phi_json_trace(capsys, monkeypatch):
    code, _, err = call(capsys, monkeypatch, ["phi", "--trace", "json"], {"rows": W.OCMT})
    steps = json.loads(err)["steps"]
    assert len(steps) == 10
    assert steps[0]["op"] == "R" and steps[0]["d"] == 1
    assert steps[-1]["triangle_after"]["rows"] == W.TOURNAMENT_TRIANGLE


def test_phi_then_psi_byte_for_byte(capsys, monkeypatch):
    for o in enumerate_ocmt(standard(3)):
        src = json.dumps(o.to_json()) + "\n"
        _, mid, _ = call(capsys, monkeypatch, ["phi"], src)
        code, back, _ = call(capsys, monkeypatch, ["psi"], mid)
        assert code == 0 and back == src


def test_generalized_phi_psi(capsys, monkeypatch):
    o = next(enumerate_ocmt((1, 3, 6)))
    src = json.dumps(o.to_json()) + "\n"
    _, mid, _ = call(capsys, monkeypatch, ["phi"], src)
    assert "rows" in json.loads(mid)
    _, back, _ = call(capsys, monkeypatch, ["psi"], mid)
    assert back == src


def test_verify(capsys, monkeypatch):
    code, out, _ = call(capsys, monkeypatch, ["verify", "refid", "--n", "3"])
    assert code == 0 and out == "equal, 8 terms\n"
    code, out, _ = call(capsys, monkeypatch, ["verify", "brid", "--n", "4"])
    assert code == 0 and out.startswith("equal")
    code, out, _ = call(capsys, monkeypatch, ["verify", "roundtrip", "--n", "3"])
    assert code == 0 and out.startswith("ok")
    code, out, _ = call(capsys, monkeypatch, ["verify", "roundtrip", "--set", "1,3,4"])
    assert code == 0 and out.startswith("ok")
    code, out, _ = call(capsys, monkeypatch, ["verify", "confluence", "--n", "3", "--samples", "5", "--seed", "7"])
    assert code == 0 and out == "ok: 40 random raising orders, 0 disagreements\n"


def test_count(capsys, monkeypatch):
    code, out, _ = call(capsys, monkeypatch, ["count", "asm", "--n", "5"])
    assert code == 0 and json.loads(out) == [{"family": "asm", "s": [1, 2, 3, 4, 5], "count": "429", "method": "enumerate"}]
    code, out, _ = call(capsys, monkeypatch, ["count", "ts", "--set", "1,2,4,5"])
    assert code == 0 and [r["count"] for r in json.loads(out)] == ["384", "384"]
    code, out, _ = call(capsys, monkeypatch, ["count", "strict", "--set", "1,2,4,5"])
    assert [r["method"] for r in json.loads(out)] == ["enumerate", "formula"]
    code, out, _ = call(capsys, monkeypatch, ["count", "ocmt", "--n", "4"])
    assert [r["count"] for r in json.loads(out)] == ["64", "64"]


def test_trace_demo_matches_golden_except_misprint(capsys, monkeypatch):
    _, out, _ = call(capsys, monkeypatch, ["trace-demo"])
    golden = (DATA / "worked_trace.txt").read_text().splitlines()
    got = out.splitlines()
    assert len(got) == len(golden)
    diff = [(a, b) for a, b in zip(got, golden) if a != b]
    assert len(diff) == 1
    assert diff[0][0].endswith("[4]") and diff[0][1].endswith("[3]")


def test_trace_demo_json(capsys, monkeypatch):
    _, out, _ = call(capsys, monkeypatch, ["trace-demo", "--trace", "json"])
    assert [s["ranks_after"] for s in json.loads(out)["steps"]][0] == [2, 1, 1, 1, 1, 0]


@pytest.mark.parametrize("argv,stdin", [
    (["ice"], {"n": 2, "rows": [[1, 1], [0, 0]]}),
    (["ice"], "not json"),
    (["phi"], {"rows": [["x:2"], ["n:1", "n:2"]]}),
    (["psi"], {"rows": W.OCMT}),
    (["phi"], {"rows": W.TOURNAMENT_TRIANGLE}),
    (["verify", "refid"], None),
    (["verify", "refid", "--n", "9"], None),
    (["count", "asm", "--set", "1,3"], None),
    (["count", "strict", "--set", "3,x"], None),
])
def test_input_errors_exit_2(capsys, monkeypatch, argv, stdin):
    code, out, err = call(capsys, monkeypatch, argv, stdin)
    assert code == 2 and out == "" and err.startswith("asmtour: error:")


def test_output_file(tmp_path, capsys, monkeypatch):
    dest = tmp_path / "out.json"
    code, out, _ = call(capsys, monkeypatch, ["count", "tournaments", "--n", "3", "--output", str(dest)])
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())[0]["count"] == "8"


def test_usage_error_and_module_entry():
    proc = subprocess.run([sys.executable, "-m", "asmtour", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "asmtour", "verify", "refid", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "equal, 2 terms\n"
