import io
import json
import subprocess
import sys

import pytest

from secondtrace.cli import main
from secondtrace.fields import parse_element, parse_field, parse_poly

F4 = "GF(2)[a]/(a^2+a+1)"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def kv(text):
    return dict(line.split("=", 1) for line in text.strip().splitlines())


def test_trace_form_cubic_f4():
    code, out = run("trace-form", "--field", F4, "--ext", "x^3+x+a")
    d = kv(out)
    assert code == 0
    assert d["residue"] == "[1,a]" and d["witt_index"] == "0"
    assert d["irreducible"] == "false"
    assert d["matrix"] == "1,a;0,1" and d["gram"] == "0,a;a,0"


def test_trace_form_quartic_and_quadratic():
    d = kv(run("trace-form", "--field", "GF(2)", "--ext", "x^4+x^3+1")[1])
    assert d["hyperbolic"] == "true" and d["witt_index"] == "2"
    d = kv(run("trace-form", "--field", "GF(2)", "--ext", "x^2+x+1")[1])
    assert d["residue"] == "[1,1]"


def test_trace_form_bm_and_audit():
    code, out = run("trace-form", "--field", F4, "--ext", "x^3+x+a", "--bm", "--audit")
    d = kv(out)
    assert code == 0 and d["dim"] == "4" and d["witt_index"] == "1" and d["residue"] == "[1,a]"
    assert any(k.startswith("audit.") for k in d)


def test_require_field():
    code, _ = run("trace-form", "--field", F4, "--ext", "x^3+x+a", "--require-field")
    assert code == 4


def test_json_output():
    code, out = run("--json", "trace-form", "--field", "GF(2)", "--ext", "x^4+x^3+1")
    data = json.loads(out)
    assert code == 0 and data["hyperbolic"] is True and data["witt_index"] == 2
    code, out = run("pmember", "--field", "GF(2)", "--elem", "1", "--json")
    assert json.loads(out)["member"] is False


def test_is_2algebraic_command():
    d = kv(run("is-2algebraic", "--field", "GF(2)", "--form", "1,1;0,1")[1])
    assert d["answer"] == "yes" and d["witness"] == "x^2+x+1"
    d = kv(run("is-2algebraic", "--field", "GF(2)", "--form", "0,1;0,0")[1])
    assert d["answer"] == "yes" and d["witness"] == "x^4+x^3+1"
    code, out = run("is-2algebraic", "--field", "GF(2)(t)", "--form", "1,1,0,0;0,1,0,0;0,0,t,t;0,0,0,t")
    assert code == 0 and kv(out)["answer"] == "no"
    code, out = run("is-2algebraic", "--field", "GF(2)(t)", "--form", "1,1,0,0;0,t,0,0;0,0,t+1,1;0,0,0,t/(t+1)")
    assert code == 5 and kv(out)["answer"] == "unknown"


def test_pmember_command():
    d = kv(run("pmember", "--field", F4, "--elem", "a")[1])
    assert d["member"] == "false"
    d = kv(run("pmember", "--field", "GF(2)(t)", "--elem", "t^2+t")[1])
    assert d["member"] == "true" and d["certificate"] == "t"
    d = kv(run("pmember", "--field", "GF(2)", "--elem", "1")[1])
    assert d["member"] == "false"


def test_verify_command():
    code, out = run("verify", "--theorem", "3", "--field", "GF(2)(t)")
    assert code == 0 and "status=PASS" in out
    code, out = run("verify", "--theorem", "4", "--field", "GF(2)(t)", "--a", "t", "--n", "5")
    assert code == 0 and "witt_index=2" in out and out.strip().endswith("status=PASS")
    code, out = run("verify", "--theorem", "1", "--max-degree", "5")
    lines = [l for l in out.splitlines() if l.startswith("theorem=")]
    assert code == 0 and len(lines) == 8 and all(l.endswith("status=PASS") for l in lines)
    code, out = run("verify", "--theorem", "2", "--field", F4, "--ext", "x^3+x+a")
    assert code == 0


def test_exit_codes():
    assert run("trace-form", "--field", "GF(2", "--ext", "x^2+x+1")[0] == 2
    assert run("trace-form", "--field", "GF(2)", "--ext", "x^2+")[0] == 2
    assert run("trace-form", "--field", "GF(2)", "--ext", "x^2+1")[0] == 4
    assert run("trace-form", "--field", "GF(2)(t)(s)", "--ext", "x^2+x+1")[0] == 3
    assert run("is-2algebraic", "--field", "GF(2)", "--form", "1,0;0,1")[0] == 2
    assert run("is-2algebraic", "--field", "GF(2)", "--form", "1,1;0")[0] == 2
    assert run("verify", "--theorem", "3", "--field", F4)[0] == 4
    assert run("verify", "--theorem", "4", "--field", "GF(2)(t)")[0] == 2
    with pytest.raises(SystemExit) as info:
        run("verify", "--theorem", "9")
    assert info.value.code == 2


def test_enumerate_round_trip():
    code, out = run("enumerate", "--field", F4, "--max-degree", "3")
    F = parse_field(F4)
    rows = [dict(tok.split("=", 1) for tok in line.split()) for line in out.strip().splitlines()]
    assert code == 0 and len(rows) == 26
    for row in rows:
        p = parse_poly(F, row["modulus"], "x")
        assert str(p) == row["modulus"]
        assert str(parse_element(F, row["a"])) == row["a"]
        if row["residue"] != "none":
            b = row["residue"][1:-1].split(",")[1]
            assert str(parse_element(F, b)) == b


def test_deterministic_output():
    args = ("trace-form", "--field", F4, "--ext", "x^3+x+a", "--audit")
    assert run(*args) == run(*args)


def test_check_identities_hook():
    code, out = run("check-identities", "--seed", "4", "--trials", "30")
    assert code == 0 and kv(out)["failures"] == "0"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "secondtrace", "pmember", "--field", "GF(2)", "--elem", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "member=true" in res.stdout
    res = subprocess.run([sys.executable, "-m", "secondtrace", "pmember", "--field", "GF(2)(t)(s)", "--elem", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 3 and res.stderr.startswith("error:")
