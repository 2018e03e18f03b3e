import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from globalize.cli import run
from globalize.report import RunReport, emit_report, passed

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code, report = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_pca_compare_ab2():
    code, out, _ = call("pca", "--fixture", "ab2:alpha=0", "--compare")
    rep = json.loads(out)
    assert code == 0
    assert rep["sizes"]["dimY"] == 4 and rep["sizes"]["dimB"] == 2
    assert rep["data"]["strict"] is True


def test_top_action_counter_fails_with_witness(tmp_path):
    path = GOLDEN / "fixtures" / "counter.json"
    code, out, _ = call("top-action", str(path))
    rep = json.loads(out)
    assert code == 1
    bad = [v for v in rep["verdicts"] if not v["pass"]]
    assert bad[0]["name"] == "globalizable"
    assert bad[0]["witness"] == {"open": [["a", "e"]], "in": "tD", "not_in": "initial"}
    assert rep["data"]["topological_partial_action"] is False


def test_set_action_z2part_golden():
    path = GOLDEN / "fixtures" / "z2part.json"
    code, out, _ = call("set-action", str(path))
    assert code == 0
    assert json.loads(out)["sizes"]["Y"] == 3
    assert out.encode() == (GOLDEN / "z2part_report.json").read_bytes()


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert call("pca", "--fixture", "ab1:sym3/alt3", "--compare", "--dump-matrices", "--report", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("argv,code", [
    (["set-action", "--fixture", "z2part-bad"], 1),
    (["top-action", "--fixture", "swap-rho"], 1),
    (["pca", "--fixture", "coaction-noncounital"], 1),
    (["pca", "--fixture", "nope"], 2),
    (["pca", "--fixture", "z2part"], 2),
    (["set-action", "missing.json"], 2),
    (["pca", "--fixture", "ab2:alpha=0", "--field", "Fp:4"], 2),
    (["pca", "--fixture", "ab1:z2", "--field", "Fp:2"], 2),
    (["top", "util", "count", "3"], 0),
    (["fixtures", "list"], 0),
    (["no-such-command"], 2),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_exit_code_matches_verdicts():
    for argv in (["set-action", "--fixture", "z2part"], ["top-action", "--fixture", "counter"],
                 ["top-action", "--fixture", "sierpinski"], ["pca", "--fixture", "trivial:h4", "--envelope"]):
        code, out, _ = call(*argv)
        rep = json.loads(out)
        assert (code == 0) == all(v["pass"] for v in rep["verdicts"]) == rep["ok"]


def test_input_errors_name_their_location(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, _, err = call("set-action", str(bad))
    assert code == 2 and "bad.json: line 1 column 2" in err
    obj = json.loads((GOLDEN / "fixtures" / "z2part.json").read_text())
    obj["rho"]["1,g"] = "7"
    bad.write_text(json.dumps(obj))
    code, _, err = call("set-action", str(bad))
    assert code == 2 and "rho" in err


def test_gl2_flag(tmp_path):
    z = tmp_path / "z.json"
    z.write_text(json.dumps({"schema": 1, "Y": ["p", "q", "r"],
                             "table": {"p,e": "p", "q,e": "q", "r,e": "r", "p,g": "q", "q,g": "p", "r,g": "r"}}))
    code, out, _ = call("set-action", "--fixture", "z2part", "--check-gl2", str(z), "--format", "text")
    # [1,e] is fixed so it must go to r; the free orbit can go to p, q or r
    assert code == 0 and "[PASS] GL2 - 3 maps on each side" in out


def test_text_format_lists_verdicts_in_order():
    code, out, _ = call("pca", "--fixture", "ab2:alpha=1", "--compare", "--format", "text")
    names = [line.split("] ")[1].split(" - ")[0] for line in out.splitlines() if line.startswith("[")]
    assert names[0] == "algebraic PCA axioms" and names[-1] == "varkappa is the inclusion of B"
    assert "strict: true" in out


def test_perturb_uses_seed():
    _, a, _ = call("pca", "--fixture", "ab2:alpha=1", "--perturb", "5", "--seed", "9")
    _, b, _ = call("pca", "--fixture", "ab2:alpha=1", "--perturb", "5", "--seed", "9")
    assert a == b and json.loads(a)["data"]["seed"] == 9


def test_explain_writes_witness():
    code, _, err = call("top-action", "--fixture", "counter", "--explain")
    assert code == 1 and "witness" in err


def test_top_util_product(tmp_path):
    s = tmp_path / "s.json"
    s.write_text(json.dumps({"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]}))
    code, out, _ = call("top", "util", "product", str(s), str(s))
    assert code == 0 and json.loads(out)["sizes"]["product_opens"] == 6


def test_empty_report_is_valid():
    r = RunReport("none")
    assert json.loads(emit_report(r))["verdicts"] == [] and r.ok
    r.add(passed("x"))
    assert emit_report(r, "text") == emit_report(r, "text")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "globalize", "set-action", "--fixture", "z2part",
                           "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0 and "Y: 3" in proc.stdout
