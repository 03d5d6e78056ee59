import json
import subprocess
import sys

import pytest

from hilbstair import cli, verify
from hilbstair.monomial import from_generators


def run(argv, stdin=None, monkeypatch=None, capsys=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def call(monkeypatch, capsys):
    return lambda argv, stdin=None: run(argv, stdin, monkeypatch, capsys)


def test_tangent_2d(call):
    code, out, _ = call(["tangent", "--input", "-"], '{"dim":2,"partition":[6,5,2,2]}')
    assert code == 0
    assert "n: 15" in out and "dim: 30" in out and "smooth: True" in out and "arrow-2d" in out


def test_tangent_3d_json(call):
    code, out, _ = call(["tangent", "--input", "-", "--format", "json"],
                        '{"dim":3,"generators":[[3,0,0],[0,2,0],[2,0,1],[1,0,2],[0,1,2],[0,0,3]]}')
    rec = json.loads(out)
    assert code == 0 and (rec["n"], rec["dim"], rec["method"], rec["smooth"]) == (11, 33, "theorem2", True)


def test_tangent_lookalike_note(call):
    code, out, _ = call(["tangent", "--input", "-", "--format", "json"],
                        '{"dim":3,"generators":[[2,0,0],[0,2,0],[0,0,2],[1,1,1]]}')
    rec = json.loads(out)
    assert code == 0 and rec["n"] == 7 and rec["method"] == "oracle" and "note" in rec


def test_tangent_bad_input(call):
    code, _, err = call(["tangent", "--input", "-"], '{"dim":2,"generators":[[2,0],[1,-1]]}')
    assert code == 2 and "generator #1" in err
    code, _, _ = call(["tangent", "--input", "/nonexistent.json"])
    assert code == 2


def test_tangent_cap(call):
    code, _, _ = call(["tangent", "--input", "-", "--cap", "10"], '{"dim":2,"partition":[6,5,2,2]}')
    assert code == 3


@pytest.mark.parametrize("pair,dim,smooth,rect", [
    ({"I": {"generators": [[2, 0], [0, 2]]}, "J": {"generators": [[1, 0], [0, 1]]}}, 8, True, False),
    ({"I": {"generators": [[3, 0], [2, 1], [1, 2], [0, 3]]}, "J": {"generators": [[1, 0], [0, 1]]}},
     14, False, False),
    ({"I": {"partition": [2, 1]}, "J": {"partition": [2, 1]}}, 6, True, True),
])
def test_nested(call, pair, dim, smooth, rect):
    code, out, _ = call(["nested", "--input", "-", "--format", "json"], json.dumps(pair))
    rec = json.loads(out)
    assert code == 0 and rec["dim"] == dim and rec["smooth"] is smooth and rec["rectangular"] is rect
    assert rec["method"] == ("theorem1" if rect else "kernel")


def test_nested_not_nested(call):
    pair = {"I": {"generators": [[1, 0], [0, 1]]}, "J": {"generators": [[2, 0], [0, 2]]}}
    code, _, _ = call(["nested", "--input", "-"], json.dumps(pair))
    assert code == 2


def test_scan_outputs(call, tmp_path):
    out = tmp_path / "h.csv"
    code, stdout, _ = call(["scan", "--kind", "hilb2", "--n", "1..10", "--out", str(out)])
    assert code == 0 and "all smooth" in stdout
    assert len(out.read_text().splitlines()) == 1 + 138
    code, stdout, _ = call(["scan", "--kind", "hilb3", "--n", "4", "--out", str(tmp_path / "c.jsonl"),
                            "--format", "json"])
    assert code == 0 and "1 singular" in stdout
    code, stdout, _ = call(["scan", "--kind", "nested", "--n", "5", "--m", "3", "--rect-only",
                            "--out", str(tmp_path / "n.csv")])
    assert code == 0 and "all smooth" in stdout


def test_scan_cap_removes_output(call, tmp_path):
    out = tmp_path / "big.csv"
    code, _, _ = call(["scan", "--kind", "hilb2", "--n", "30", "--out", str(out)])
    assert code == 3 and not out.exists()
    code, _, _ = call(["scan", "--kind", "hilb2", "--n", "1..5", "--cap", "4", "--out", str(out)])
    assert code == 3 and not out.exists()


@pytest.mark.parametrize("doc,expect", [
    ('{"dim":2,"partition":[3,1]}', ["arrow-2d=8", "weight=8", "batched=8", "dense=8"]),
    ('{"dim":3,"plane_partition":[[2,1],[1]]}', ["weight=18", "batched=18", "dense=18"]),
    ('{"I":{"generators":[[3,0],[0,1]]},"J":{"generators":[[1,0],[0,1]]}}', ["kernel=6", "theorem1=6"]),
])
def test_verify_single(call, doc, expect):
    code, out, _ = call(["verify", "--input", "-"], doc)
    assert code == 0 and out.startswith("ok")
    assert all(e in out for e in expect)


def test_verify_mismatch_exit_and_dump(call, monkeypatch):
    real = verify.check

    def broken(inst, dense_cap=20_000):
        res = real(inst, dense_cap)
        if inst.kind == "hilb2" and inst.ideal.colength >= 3:
            res.values["dense"] = -1
        return res

    monkeypatch.setattr(verify, "check", broken)
    code, out, _ = call(["verify", "--input", "-"], '{"dim":2,"partition":[3,2]}')
    assert code == 4
    dump = json.loads(out.split("counter-instance: ", 1)[1])
    small = from_generators(dump["instance"]["generators"], 2)
    # shrinking stops at colength 3, the smallest broken size
    assert small.colength == 3 and dump["values"]["dense"] == -1


def test_render(call, tmp_path):
    code, out, _ = call(["render", "--input", "-"], '{"dim":2,"partition":[2,2]}')
    assert code == 0 and "[ ][ ]" in out
    svg = tmp_path / "p.svg"
    code, _, _ = call(["render", "--input", "-", "--format", "svg", "--filter", "P", "--out", str(svg)],
                      '{"dim":2,"partition":[6,5,2,2]}')
    assert code == 0 and svg.read_text().count('class="arrow') == 15
    code, out, _ = call(["render", "--input", "-"], '{"dim":3,"generators":[[1,0,0],[0,1,0],[0,0,2]]}')
    assert out.count("(1x1)") == 2
    code, _, _ = call(["render", "--input", "-", "--format", "svg", "--filter", "type1"],
                      '{"dim":3,"generators":[[1,0,0],[0,1,0],[0,0,2]]}')
    assert code == 2


def test_range_parser():
    assert cli.parse_range("1..4") == [1, 2, 3, 4]
    assert cli.parse_range("5,2,2") == [2, 5]


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "hilbstair.cli", "tangent", "--input", "-"],
                          input='{"dim":2,"partition":[1]}', capture_output=True, text=True)
    assert proc.returncode == 0 and "dim: 2" in proc.stdout
