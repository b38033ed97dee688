import json
import subprocess
import sys

import pytest

from qdouble.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_simplify(capsys):
    code, out = invoke(capsys, "simplify", "F*E", "--mode", "symbolic")
    assert code == 0
    assert out.strip() == "E F - (v-v^-1)^-1 K + (v-v^-1)^-1 Kt^-1"


def test_simplify_formats(capsys):
    _, out = invoke(capsys, "simplify", "K*E", "--format", "latex")
    assert out.strip() == "v^{2} E K"
    _, out = invoke(capsys, "simplify", "K*E", "--format", "json")
    obj = json.loads(out)
    assert obj["normal_form"] == "v^2 E K" and obj["mode"] == "symbolic"
    _, out = invoke(capsys, "simplify", "K*E", "--algebra", "Uq", "--mode", "rational:2")
    assert out.strip() == "4 E K"
    code, out = invoke(capsys, "simplify", "Kt*E", "--algebra", "Uq")
    assert code == 2 and json.loads(out)["error"]["type"] == "ParseError"


def test_pair(capsys):
    code, out = invoke(capsys, "pair", "E", "F")
    assert code == 0 and out.strip() == "1/(v^2-1)"
    _, out = invoke(capsys, "pair", "E", "F", "--mode", "rational:2")
    assert out.strip() == "1/3"


def test_pair_rejects_wrong_sides(capsys):
    code, out = invoke(capsys, "pair", "F", "E")
    assert code == 2 and "error" in json.loads(out)


def test_double_mul(capsys):
    code, out = invoke(capsys, "double-mul", "E", "F")
    assert code == 0 and out.strip() == "v [E (x) F]"
    _, out = invoke(capsys, "double-mul", "F", "E", "--format", "json")
    obj = json.loads(out)
    assert obj["pulled_back"] == "E F - (v-v^-1)^-1 K + (v-v^-1)^-1 Kt^-1"


def test_verify_lemma21(capsys):
    code, out = invoke(capsys, "verify", "lemma21", "--max", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["pass"] and len(obj["criteria"][0]["checks"]) == 36


def test_verify_lemma22_part_and_text(capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    code, out = invoke(capsys, "verify", "lemma22", "--part", "4", "--format", "text")
    assert code == 0 and "\033[" not in out and "PASS" in out


def test_verify_unknown_suite(capsys):
    code, out = invoke(capsys, "verify", "nonsense")
    assert code == 2 and json.loads(out)["error"]["type"] == "UsageError"


def test_module(capsys):
    code, out = invoke(capsys, "module", "--kind", "verma", "--s", "3", "--lam", "5", "--trunc", "3",
                       "--mode", "rational:2")
    assert code == 0
    obj = json.loads(out)
    assert obj["k_weights"][1] == {"rational": "15/4"}
    assert obj["relations_pass"] and obj["exempt"]
    code, out = invoke(capsys, "module", "--kind", "z0", "--lam", "2", "--d", "3", "--mode", "cyclotomic:6:1")
    assert code == 0 and json.loads(out)["dim"] == 3


def test_module_bad_parameters(capsys):
    code, out = invoke(capsys, "module", "--kind", "simple", "--s", "0")
    assert code == 2
    code, _ = invoke(capsys, "module", "--kind", "nope")
    assert code == 2


def test_tensor_decompose(capsys):
    code, out = invoke(capsys, "tensor-decompose", "simple:s=3,n=2,sign=+", "simple:s=5,n=1,sign=-",
                       "--mode", "rational:2")
    assert code == 0
    obj = json.loads(out)
    assert [(c["n"], c["sign"], c["s"]) for c in obj["components"]] == [(3, "-", "15"), (1, "-", "15")]
    assert obj["dimension_check"] and not obj["residual"]


def test_tensor_decompose_refuses_root_of_unity(capsys):
    code, _ = invoke(capsys, "tensor-decompose", "simple:n=1", "simple:n=1", "--mode", "cyclotomic:8:1")
    assert code == 2


def test_taft(capsys):
    code, out = invoke(capsys, "taft", "--d", "2", "dim")
    assert code == 0 and json.loads(out)["dimension"] == 16
    code, out = invoke(capsys, "taft", "--d", "3", "gram")
    obj = json.loads(out)
    assert code == 0 and obj["nondegenerate"] and obj["block_structure"] and obj["vandermonde_form"]
    code, out = invoke(capsys, "taft", "--d", "2", "inventory", "--lam", "2")
    rows = json.loads(out)["modules"]
    assert code == 0 and len(rows) == 6 and all(r["simple"] for r in rows)


def test_cartan_check(capsys, tmp_path):
    mats = {"E": [[["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]], [["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]]],
            "F": [[["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]], [["0", "0", "0"], ["0", "0", "0"], ["0", "1", "0"]]],
            "K": [[["v", "0", "0"], ["0", "v^-1", "0"], ["0", "0", "1"]], [["1", "0", "0"], ["0", "v", "0"], ["0", "0", "v^-1"]]]}
    path = tmp_path / "sl3.json"
    path.write_text(json.dumps(mats))
    code, out = invoke(capsys, "cartan", "check", "--matrix-file", str(path),
                       "--cartan", '{"a": [[2, -1], [-1, 2]], "d": [1, 1]}', "--s", "2,v")
    assert code == 0 and json.loads(out)["pass"]
    mats["E"][0][0][1] = "2"
    path.write_text(json.dumps(mats))
    code, out = invoke(capsys, "cartan", "check", "--matrix-file", str(path),
                       "--cartan", '{"a": [[2, -1], [-1, 2]]}')
    assert code == 1 and not json.loads(out)["pass"]


def test_cartan_invalid_matrix(capsys, tmp_path):
    code, out = invoke(capsys, "cartan", "check", "--matrix-file", "{}", "--cartan", '{"a": [[2, -2], [-2, 2]]}')
    assert code == 2


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["simplify", "E +* F"], ["simplify", "E", "--mode", "cyclotomic:2:1"],
    ["pair"], ["simplify", "E", "--format", "yaml"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out = invoke(capsys, *argv)
    assert code == 2
    assert set(json.loads(out)["error"]) == {"type", "message"}


def test_reports_are_byte_identical(capsys):
    outs = []
    for _ in range(2):
        run(["verify", "pairing"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qdouble", "pair", "E", "F"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/(v^2-1)"
