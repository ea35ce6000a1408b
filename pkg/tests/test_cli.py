import json
import random

import pytest

from tropbetti.cli import (
    InputError,
    main,
    parse_complex,
    parse_system,
    serialize_system,
)
from tropbetti.corpus import random_system
from tropbetti.tropical import LinForm, TropPoly, TropSystem

LINE_DOC = '{"n":2,"polys":[[[[1,0],"0"],[[0,1],"0"],[[0,0],"0"]]]}'


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        buf = io.BytesIO(stdin.encode())
        monkeypatch.setattr(sys, "stdin", type("S", (), {"buffer": buf})())
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------- parsing


def test_parse_system_tropical_line():
    s = parse_system(LINE_DOC.encode())
    assert s.n == 2 and s.k == 1 and s.polys[0].m == 3


def test_parse_system_univariate():
    s = parse_system(b'{"n":1,"polys":[[[[2],"0"],[[1],"1"],[[0],"3"]]]}')
    assert {(m.a, m.b) for m in s.polys[0].monomials} == {
        ((2,), 0),
        ((1,), 1),
        ((0,), 3),
    }


def test_parse_system_negative_coefficient_error():
    with pytest.raises(InputError, match=r"negative coefficient at polys\[0\]\[0\]"):
        parse_system(b'{"n":1,"polys":[[[[-1],"0"]]]}')


def test_parse_system_laurent_flag_allows_negative():
    s = parse_system(b'{"n":1,"laurent":true,"polys":[[[[-1],"0"],[[0],"0"]]]}')
    assert s.polys[0].laurent


def test_parse_system_schema_errors():
    with pytest.raises(InputError, match="invalid JSON"):
        parse_system(b"{")
    with pytest.raises(InputError, match='"n"'):
        parse_system(b'{"polys":[]}')
    with pytest.raises(InputError, match=r"zero monomials at polys\[0\]"):
        parse_system(b'{"n":1,"polys":[[]]}')
    with pytest.raises(InputError, match=r"polys\[0\]\[0\]"):
        parse_system(b'{"n":2,"polys":[[[[1],"0"]]]}')
    with pytest.raises(InputError, match="invalid rational"):
        parse_system(b'{"n":1,"polys":[[[[1],"1/0"]]]}')


def test_parse_serialize_roundtrip_seeded():
    rng = random.Random(71)
    for _ in range(25):
        s = random_system(rng)
        doc = json.dumps(serialize_system(s)).encode()
        assert parse_system(doc) == s


def test_parse_serialize_roundtrip_laurent():
    s = TropSystem(1, [TropPoly([LinForm.make((-2,), 1), LinForm.make((0,), 0)], laurent=True)])
    assert parse_system(json.dumps(serialize_system(s)).encode()) == s


def test_parse_complex():
    c = parse_complex(
        b'{"n":2,"polyhedra":[{"eq":[[[0,1],"0"]],"ineq":[[[1,0],"0"]]}]}'
    )
    assert c.n == 2 and len(c.polyhedra) == 1
    assert c.polyhedra[0].contains((3, 0))


# --------------------------------------------------------------- commands


def test_betti_command(capsys, monkeypatch):
    code, out, _ = run(capsys, ["betti", "-"], LINE_DOC, monkeypatch)
    assert code == 0 and json.loads(out) == [1]


def test_betti_empty_prevariety(capsys, monkeypatch):
    code, out, _ = run(capsys, ["betti", "-"], '{"n":2,"polys":[[[[0,0],"5"]]]}', monkeypatch)
    assert code == 0 and json.loads(out) == []


def test_cells_command(capsys, monkeypatch):
    code, out, _ = run(capsys, ["cells", "-"], LINE_DOC, monkeypatch)
    assert code == 0
    cells = json.loads(out)["cells"]
    assert len(cells) == 4
    assert sorted(c["dim"] for c in cells) == [0, 1, 1, 1]


def test_bounds_and_check_commands(capsys, monkeypatch):
    code, out, _ = run(capsys, ["bounds", "-"], LINE_DOC, monkeypatch)
    assert code == 0
    rep = json.loads(out)
    assert rep["phi"] == 4 and rep["dense_bound_sq"] == [49, 1]
    assert rep["sparse_bound"] == 24 and rep["degree_bound"] == 7

    code, out, _ = run(capsys, ["check", "-", "--oracle"], LINE_DOC, monkeypatch)
    assert code == 0
    rep = json.loads(out)
    assert rep["betti"] == [1] and rep["all_ok"] is True
    assert rep["cross_method_ok"] and rep["duality_ok"] and rep["oracle_ok"]


def test_dual_and_components_commands(capsys, monkeypatch):
    code, out, _ = run(capsys, ["dual", "-"], LINE_DOC, monkeypatch)
    assert code == 0
    faces = json.loads(out)["faces"]
    assert len(faces) == 7 and sum(f["tropical"] for f in faces) == 4
    code, out, _ = run(capsys, ["components", "-"], LINE_DOC, monkeypatch)
    assert code == 0
    assert len(json.loads(out)["components"]) == 1


def test_gen_grid_pipeline(capsys, monkeypatch):
    code, out, _ = run(capsys, ["gen", "grid", "--n", "2", "--m", "3"])
    assert code == 0
    code, out, _ = run(capsys, ["betti", "-"], out, monkeypatch)
    assert code == 0 and json.loads(out) == [9]


def test_realize_command(capsys, monkeypatch):
    doc = '{"n":1,"polyhedra":[{"eq":[[[1],"0"]]},{"eq":[[[1],"5"]]}]}'
    code, out, _ = run(capsys, ["realize", "-"], doc, monkeypatch)
    assert code == 0
    code, out, _ = run(capsys, ["betti", "-"], out, monkeypatch)
    assert code == 0 and json.loads(out) == [2]


def test_exit_code_on_invalid_input(capsys, monkeypatch):
    code, out, err = run(capsys, ["betti", "-"], '{"n":1,"polys":[[[[-1],"0"]]]}', monkeypatch)
    assert code == 1 and out == ""
    assert "negative coefficient" in err


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, ["betti", "/nonexistent/file.json"])
    assert code == 1 and "cannot read" in err


def test_output_byte_stability(capsys, monkeypatch):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, ["check", "-"], LINE_DOC, monkeypatch)
        outs.append(out)
    assert outs[0] == outs[1]


def test_check_corpus_mode(tmp_path, capsys):
    code, out, _ = run(
        capsys, ["gen", "corpus", "--seed", "3", "--count", "4", "--dir", str(tmp_path)]
    )
    assert code == 0 and json.loads(out)["written"] == 4
    code, out, _ = run(capsys, ["check", "--corpus", str(tmp_path)])
    rep = json.loads(out)
    assert code == 0 and rep["count"] == 4 and rep["all_ok"] and rep["failures"] == []


def test_emit_off(tmp_path, capsys, monkeypatch):
    path = tmp_path / "cells.off"
    code, _, _ = run(
        capsys, ["cells", "-", "--emit-off", str(path)], LINE_DOC, monkeypatch
    )
    assert code == 0
    text = path.read_text()
    assert text.startswith("OFF\n")
