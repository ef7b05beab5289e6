import json
import subprocess
import sys

import pytest

from superlie.algebra_io import (
    AlgebraParseError,
    AlgebraValidationError,
    emit_algebra,
    kernel_names,
    parse_algebra,
)
from superlie.catalog import all_entries, heisenberg_even, heisenberg_odd
from superlie.cli import main
from superlie.superalg import structure_equal

ENTRIES = all_entries()


def doc(even=(), odd=(), brackets=(), name="t"):
    return json.dumps({"name": name, "even": list(even), "odd": list(odd), "brackets": list(brackets)})


def br(left, right, **terms):
    return {"left": left, "right": right, "value": [{"basis": b, "coeff": c} for b, c in terms.items()]}


def write(tmp_path, text, name="alg.json"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_heisenberg_file():
    L = parse_algebra(doc(["x1", "x2", "z"], [], [br("x1", "x2", z="1")]))
    assert structure_equal(L, heisenberg_even(1, 0))


def test_parse_rationals_and_orientation():
    L = parse_algebra(doc(["x1", "x2", "z"], [], [br("x2", "x1", z="-3/6")]))
    assert L.basis_bracket(0, 1)[2] == 0.5


def test_parse_errors():
    with pytest.raises(AlgebraParseError):
        parse_algebra("{not json")
    with pytest.raises(AlgebraParseError):
        parse_algebra(doc(["x"], ["x"]))
    with pytest.raises(AlgebraParseError):
        parse_algebra(doc(["x"], [], [br("x", "q", x="1")]))
    with pytest.raises(AlgebraParseError):
        parse_algebra(doc(["x", "y"], [], [br("x", "y", x="1/0")]))
    with pytest.raises(AlgebraParseError):
        parse_algebra(doc(["x", "y"], [], [br("x", "y", x=0.5)]))


def test_validation_errors():
    with pytest.raises(AlgebraValidationError) as info:
        parse_algebra(doc([], ["y"], [br("y", "y", y="1")]))
    assert any(v.kind == "grading" for v in info.value.report.violations)
    with pytest.raises(AlgebraValidationError):
        parse_algebra(doc(["x", "y", "z"], [], [br("x", "y", z="1"), br("y", "x", z="1")]))


@pytest.mark.parametrize("e", ENTRIES, ids=[e.key for e in ENTRIES])
def test_round_trip(e):
    text = emit_algebra(e.algebra)
    back = parse_algebra(text)
    assert structure_equal(back, e.algebra)
    assert back.names == e.algebra.names
    assert emit_algebra(back) == text


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["validate", write(tmp_path, doc([], ["y"], [br("y", "y", y="1")]))]) == 1
    assert main(["validate", write(tmp_path, doc(["x"], ["x"]), "dup.json")]) == 2
    assert main(["multiplier", write(tmp_path, "[]", "bad.json")]) == 2
    assert main(["info", "no-such-key"]) == 2
    good = write(tmp_path, emit_algebra(heisenberg_odd(1)), "h1.json")
    assert main(["validate", good]) == 0
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_multiplier_h2(capsys):
    assert main(["multiplier", "H_2"]) == 0
    out = capsys.readouterr().out
    assert "dim M(L) = 7" in out and "(4 | 3)" in out and "t(L) = 6" in out and "s(L) = 3" in out
    assert main(["multiplier", "H_2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["multiplier"], data["graded"], data["t"], data["s"]) == (7, "(4 | 3)", 6, 3)


def test_cli_info_l40(capsys):
    assert main(["info", "L_{4,0}"]) == 0
    out = capsys.readouterr().out
    assert "class 3" in out
    assert "center: dims (1 | 0)" in out


def test_cli_cover_file(tmp_path, capsys):
    out = tmp_path / "cover.json"
    assert main(["cover", "H_1", "--out", str(out)]) == 0
    text = out.read_text()
    K = parse_algebra(text)
    assert K.dims.even == 2 and K.dims.odd == 3
    assert sorted(kernel_names(text)) == ["me1", "mo1"]
    assert main(["validate", str(out)]) == 0


def test_cli_catalog(capsys):
    assert main(["catalog"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(ENTRIES)
    assert any(line.startswith("H(0,1) ") and "M=0" in line for line in lines)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superlie", "multiplier", "H(1,0)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "dim M(L) = 2" in proc.stdout
