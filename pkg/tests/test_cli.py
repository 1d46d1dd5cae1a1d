import json
import subprocess
import sys

import pytest

from forceproof import io
from forceproof.cli import main

from conftest import FORCED, SUPERFICIAL


def _write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def _arg(tmp_path, name, table, dom=("a1", "a2"), cod=("b1", "b2")):
    return _write(tmp_path, name, {"domain": {"atoms": list(dom)}, "codomain": {"atoms": list(cod)}, "table": table})


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(tmp_path, capsys):
    code, out, _ = _run(capsys, "validate", _arg(tmp_path, "f.json", FORCED, ("p",), ("q",)))
    assert code == 0
    assert json.loads(out) == {"valid": True, "violations": []}


def test_validate_violation(tmp_path, capsys):
    code, out, _ = _run(capsys, "validate", _arg(tmp_path, "f.json", [[1, 1], [0.2, 1]], ("p",), ("q",)))
    assert code == 1
    report = json.loads(out)
    assert report["violations"][0]["rule"] == "iii"
    assert report["violations"][0]["witness"] == {"A": ["p"], "B": []}


def test_malformed_exits_2(tmp_path, capsys):
    path = _write(tmp_path, "bad.json", {"domain": {"atoms": ["p"]}, "table": FORCED})
    code, _, err = _run(capsys, "validate", path)
    assert code == 2
    assert "codomain" in err
    bad = tmp_path / "broken.json"
    bad.write_text("[")
    assert main(["classify", str(bad)]) == 2


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["transform"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["validate", "x.json", "--tolerance", "-1"])
    assert info.value.code == 2


def test_classify(tmp_path, capsys, e1):
    path = _write(tmp_path, "e1.json", io.argument_to_json(e1))
    code, out, _ = _run(capsys, "classify", path, "--oracle")
    assert code == 0
    report = json.loads(out)
    assert report["implication"] and report["inference"]
    assert report["algebras"] == "entangled"
    assert report["oracle"]["pass"]


def test_classify_superficial(tmp_path, capsys):
    code, out, _ = _run(capsys, "classify", _arg(tmp_path, "s.json", SUPERFICIAL))
    assert code == 0
    assert json.loads(out)["superficial"]


def test_classify_invalid(tmp_path, capsys):
    code, out, _ = _run(capsys, "classify", _arg(tmp_path, "f.json", [[1, 1], [0.2, 1]], ("p",), ("q",)))
    assert code == 1
    assert json.loads(out)["valid"] is False


def test_transform(tmp_path, capsys, e3):
    path = _write(tmp_path, "e3.json", io.argument_to_json(e3))
    code, out, _ = _run(capsys, "transform", path, "--oracle")
    assert code == 0
    report = json.loads(out)
    assert report["direction"] == "backward"
    assert report["table"][3][1] == pytest.approx(0.18, abs=1e-15)
    assert report["diagnostics"]["sums_ok"] and report["diagnostics"]["oracle"]["pass"]
    code, out, _ = _run(capsys, "transform", path, "--direction", "forward")
    assert json.loads(out)["table"][1][1] == pytest.approx(0.12, abs=1e-15)


def test_table_format(tmp_path, capsys, e3):
    path = _write(tmp_path, "e3.json", io.argument_to_json(e3))
    code, out, _ = _run(capsys, "transform", path, "--format", "table")
    assert code == 0
    assert "{a1}" in out


def test_table_size_limit(tmp_path, capsys, e3):
    path = _write(tmp_path, "e3.json", io.argument_to_json(e3))
    code, _, err = _run(capsys, "classify", path, "--max-table-bits", "3")
    assert code == 1
    assert err


@pytest.mark.parametrize("flag, payload, expected", [
    ("--prototypical", {"algebra": {"atoms": ["x", "y"]}, "atom_probs": [0.25, 0.75]}, [1, 0.75, 1, 0.75]),
    ("--product", {"rows": [[0.3, 0.7], [0.6, 0.4]]}, None),
    ("--relation", {"domain": {"atoms": ["a1", "a2"]}, "codomain": {"atoms": ["b1", "b2"]},
                    "atom_pairs": [[0, 0], [1, 1]]}, None),
    ("--identity", {"atoms": ["x", "y"]}, None),
])
def test_make_roundtrips_through_validate(tmp_path, capsys, flag, payload, expected):
    code, out, _ = _run(capsys, "make", flag, _write(tmp_path, "in.json", payload))
    assert code == 0
    made = json.loads(out)
    if expected is not None:
        assert [row[2] for row in made["table"]] == expected
    code, out, _ = _run(capsys, "validate", _write(tmp_path, "made.json", made))
    assert code == 0


def test_make_strict_relation_fails(tmp_path, capsys):
    rel = {"domain": {"atoms": ["a1", "a2"]}, "codomain": {"atoms": ["b1", "b2"]},
           "atom_pairs": [[0, 0], [1, 1]], "mode": "strict"}
    code, _, err = _run(capsys, "make", "--relation", _write(tmp_path, "r.json", rel))
    assert code == 1
    assert "condition" in err


def test_make_non_stochastic(tmp_path, capsys):
    code, _, _ = _run(capsys, "make", "--product", _write(tmp_path, "p.json", {"rows": [[0.5, 0.6]]}))
    assert code == 1


def test_compose(tmp_path, capsys, e3):
    path = _write(tmp_path, "e3.json", io.argument_to_json(e3))
    ident = _write(tmp_path, "id.json", {"domain": {"atoms": ["b1", "b2"]}, "codomain": {"atoms": ["b1", "b2"]},
                                         "table": [[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]]})
    code, out, _ = _run(capsys, "compose", path, ident, "--oracle")
    assert code == 0
    report = json.loads(out)
    assert report["diagnostics"]["functoriality"] == "pass"
    assert report["diagnostics"]["oracle"]["pass"]
    assert report["reconstruction"]["valid"]
    assert report["kernel"]["table"][3][1] == pytest.approx(0.18, abs=1e-15)


def test_compose_superficial(tmp_path, capsys, e3):
    path = _write(tmp_path, "e3.json", io.argument_to_json(e3))
    code, _, err = _run(capsys, "compose", path, _arg(tmp_path, "s.json", SUPERFICIAL, ("b1", "b2")))
    assert code == 1
    assert "superficial" in err


def test_compose_mismatch(tmp_path, capsys, e3):
    path = _write(tmp_path, "e3.json", io.argument_to_json(e3))
    code, _, _ = _run(capsys, "compose", path, path)
    assert code == 1


def test_propagate(tmp_path, capsys, e5):
    arg = _write(tmp_path, "e5.json", io.argument_to_json(e5))
    mass = _write(tmp_path, "m.json", {"algebra": {"atoms": ["a"]}, "mass": [0, 1]})
    code, out, _ = _run(capsys, "propagate", mass, arg)
    assert code == 0
    report = json.loads(out)
    assert report["mass"] == pytest.approx([0, 0.3, 0.7, 0], abs=1e-15)
    assert report["normalized"]


def test_propagate_bad_mass(tmp_path, capsys, e5):
    arg = _write(tmp_path, "e5.json", io.argument_to_json(e5))
    mass = _write(tmp_path, "m.json", {"algebra": {"atoms": ["a"]}, "mass": [0.5, 0.6]})
    assert _run(capsys, "propagate", mass, arg)[0] == 1


def test_demo(capsys):
    code, out, _ = _run(capsys, "demo")
    assert code == 0
    report = json.loads(out)
    m = io.mass_from_json(report)
    assert m.mass == pytest.approx([0, 0.7145, 0.1895, 0.096], abs=1e-12)
    assert report["classification"]["implication"]
    code, out, _ = _run(capsys, "demo", "--format", "table")
    assert code == 0 and "letter" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "forceproof", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "validate" in proc.stdout
