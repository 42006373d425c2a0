import json

import pytest
from hypothesis import given, strategies as st

from ruled_locus import io
from ruled_locus.birational import random_extension
from ruled_locus.cli import main
from ruled_locus.exact import GF, QQ
from ruled_locus.lines import gen_cone, gen_type_a
from ruled_locus.locus import psi_biform
from ruled_locus.selftest import worked_example

fields = st.sampled_from([QQ, GF(10007)])


@given(st.integers(3, 7), st.integers(0, 10 ** 6), fields)
def test_surface_roundtrip(d, seed, F):
    psi = gen_type_a(d, 1 + seed % (d // 2), seed=seed, field=F)
    text = io.dumps(io.surface_to_doc(psi))
    back = io.surface_from_doc(io.loads(text))
    assert back == psi
    assert io.dumps(io.surface_to_doc(back)) == text


@given(st.integers(3, 7), st.integers(0, 10 ** 6), fields)
def test_curve_roundtrip_normalized(d, seed, F):
    G = psi_biform(gen_type_a(d, 1, seed=seed, field=F))
    doc = io.curve_to_doc(G)
    assert doc["coeffs"][next(i for i, c in enumerate(doc["coeffs"]) if c != "0")] == "1"
    assert io.curve_to_doc(G * F(5)) == doc
    text = io.dumps(doc)
    assert io.dumps(io.curve_to_doc(io.curve_from_doc(io.loads(text)))) == text


def test_extension_roundtrip():
    E = random_extension(3, seed=2, field=GF(101))
    text = io.dumps(io.extension_to_doc(E))
    assert io.extension_to_doc(io.extension_from_doc(io.loads(text))) == io.loads(text)


@pytest.mark.parametrize("doc", [
    [],
    {"d": 3},
    {"d": 3, "omega": [["1"] * 4] * 5},
    {"d": 3, "omega": [["1"] * 3] * 6},
    {"d": 3, "omega": [["x"] * 4] * 6},
    {"d": 3, "omega": [["0"] * 4] * 6},
    {"d": 3, "omega": [["1"] * 4] * 6, "field": {"type": "R"}},
    {"d": -1, "omega": []},
])
def test_bad_surface_documents(doc):
    with pytest.raises(io.DocumentError):
        io.surface_from_doc(doc)


def test_parse_field():
    assert io.parse_field("q") == QQ
    assert io.parse_field("fp:101") == GF(101)
    with pytest.raises(io.DocumentError):
        io.parse_field("fp:100")
    with pytest.raises(io.DocumentError):
        io.parse_field("r")


def _write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(io.dumps(doc))
    return str(p)


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_gen_analyze(tmp_path, capsys):
    code, out, _ = _run(capsys, "gen", "--kind", "type-a", "--d", "3", "--a", "1", "--seed", "7")
    assert code == 0
    path = tmp_path / "s.json"
    path.write_text(out)
    code, out, _ = _run(capsys, "analyze", str(path))
    rep = json.loads(out)
    assert code == 0
    assert rep["validity"]["in_R_d"] is True
    assert rep["splitting_type"]["a_Q"] == 1
    assert rep["theorem"]["holds"] is True
    # developable iff the conic divides the curve; here the curve is a line
    assert rep["developable"] is False


def test_cli_psi_both(tmp_path, capsys):
    path = _write(tmp_path, "w.json", io.surface_to_doc(worked_example()))
    code, out, _ = _run(capsys, "psi", path, "--method", "both")
    doc = json.loads(out)
    assert code == 0
    assert doc["proportional"] is True and doc["scalar"] == "-1"
    assert doc["biform"] == doc["det"] == {"coeffs": ["0", "0", "1"], "degree": 1, "field": {"type": "Q"}}


def test_cli_phi(tmp_path, capsys):
    path = _write(tmp_path, "w.json", io.surface_to_doc(worked_example()))
    code, out, _ = _run(capsys, "phi", path)
    doc = json.loads(out)
    assert doc["rank"] == 3
    assert doc["matrix"][1][3] == doc["matrix"][3][1] == "-1" and doc["matrix"][2][2] == "2"


def test_cli_degrees(capsys):
    code, out, _ = _run(capsys, "degrees", "--d", "6")
    doc = json.loads(out)
    assert code == 0
    assert (doc["i"], doc["j"], doc["k"], doc["p"]) == (7, 56, 294, 672)
    code, out, _ = _run(capsys, "degrees", "--d", "4")
    assert json.loads(out)["boundary"] == 6


def test_cli_dual_and_act(tmp_path, capsys):
    path = _write(tmp_path, "w.json", io.surface_to_doc(gen_type_a(4, 2)))
    code, out, _ = _run(capsys, "dual", path)
    assert code == 0 and json.loads(out)["d"] == 4
    g = _write(tmp_path, "g.json", [["1", "0", "0", "0"], ["0", "2", "0", "0"], ["0", "0", "1", "1"], ["0", "0", "0", "1"]])
    code, out, _ = _run(capsys, "act", "--pgl4", g, path)
    assert code == 0
    h = _write(tmp_path, "h.json", [["1", "1"], ["0", "1"]])
    code, out, _ = _run(capsys, "act", "--pgl2", h, path)
    assert code == 0
    bad = _write(tmp_path, "bad.json", [["1", "1"], ["1", "1"]])
    code, _, err = _run(capsys, "act", "--pgl2", bad, path)
    assert code == 1 and "error" in json.loads(err)


def test_cli_triangles(tmp_path, capsys):
    G = psi_biform(gen_type_a(5, 2, seed=14, field=GF(101)))
    path = _write(tmp_path, "c.json", io.curve_to_doc(G))
    code, out, _ = _run(capsys, "triangles", path, "--mode", "exact")
    assert code == 0 and json.loads(out)["count"] == 2
    code, out, _ = _run(capsys, "triangles", path, "--mode", "brute:101")
    assert code == 0 and json.loads(out)["count"] == 1
    cone = _write(tmp_path, "k.json", io.curve_to_doc(psi_biform(gen_cone(5, 2))))
    code, out, _ = _run(capsys, "triangles", cone)
    assert code == 2 and json.loads(out)["status"] == "infinite"


def test_cli_from_extension(tmp_path, capsys):
    path = _write(tmp_path, "e.json", io.extension_to_doc(random_extension(2, seed=0)))
    code, out, _ = _run(capsys, "from-extension", path)
    doc = json.loads(out)
    assert code == 0 and doc["equal"] is True
    assert doc["curve"] == doc["psi"]


def test_cli_invalid_document(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    code, out, err = _run(capsys, "analyze", str(p))
    assert code == 1 and out == ""
    assert "error" in json.loads(err)
    code, _, err = _run(capsys, "psi", str(tmp_path / "missing.json"))
    assert code == 1


def test_cli_degenerate_exit(tmp_path, capsys):
    code, out, _ = _run(capsys, "gen", "--kind", "point-cone", "--d", "4")
    path = tmp_path / "pc.json"
    path.write_text(out)
    code, out, err = _run(capsys, "analyze", str(path))
    assert code == 2
    assert json.loads(out)["stability"]["class"] == "Unstable"
    assert json.loads(err)["degenerate"] is True
    code, _, _ = _run(capsys, "psi", str(path))
    assert code == 2


def test_cli_batch_order(tmp_path, capsys, monkeypatch):
    docs = [io.surface_to_doc(gen_type_a(d, 1, seed=d)) for d in (6, 3, 7, 4)]
    p = tmp_path / "batch.jsonl"
    p.write_text("\n".join(io.dumps(x) for x in docs) + "\nnot json\n")
    outs = {}
    for threads in ("1", "3"):
        monkeypatch.setenv("RULED_LOCUS_THREADS", threads)
        code, out, _ = _run(capsys, "analyze", "--batch", str(p))
        lines = [json.loads(x) for x in out.splitlines()]
        assert code == 1
        assert [x.get("d") for x in lines] == [6, 3, 7, 4, None]
        assert "error" in lines[-1]
        outs[threads] = [x.get("psi") for x in lines]
    assert outs["1"] == outs["3"]


def test_cli_selftest_quick_subset(monkeypatch, capsys):
    from ruled_locus import selftest

    monkeypatch.setattr(selftest, "CRITERIA", [c for c in selftest.CRITERIA if c[0] in (3, 9)])
    code, out, _ = _run(capsys, "selftest", "--quick")
    assert code == 0
    assert out.count("PASS") == 2 and "2/2 criteria passed" in out
