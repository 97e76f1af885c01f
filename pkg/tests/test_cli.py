import json

import pytest

from sevlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_faces_octonionic(capsys):
    code, out = run(capsys, "faces", "--algebra", "O", "--method", "both", "--format", "json")
    d = json.loads(out)
    assert code == 0 and not d["failures"]
    assert d["results"]["O.faces.kostant"]["actual"][-1] == 100386
    assert d["results"]["O.faces.match"]["status"] == "pass"
    assert set(d) == {"command", "params", "results", "failures", "seed", "elapsed_ms"}


def test_faces_real_text(capsys):
    code, out = run(capsys, "faces", "--algebra", "R", "--method", "klee")
    assert code == 0 and "f_2 = 10" in out


def test_faces_csv(capsys):
    code, out = run(capsys, "faces", "--algebra", "C", "--format", "csv")
    assert out.splitlines()[:2] == ["k,f_k", "0,9"]


def test_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["hasse", "--algebra", "X"])
    assert e.value.code == 2


def test_hasse_to_file(tmp_path, capsys):
    out = tmp_path / "o.dot"
    code, _ = run(capsys, "hasse", "--algebra", "O", "--highlight", "interval", "--out", str(out))
    text = out.read_text()
    assert code == 0 and text.count("[label=") == 56


def test_links(capsys):
    code, out = run(capsys, "links", "--algebra", "H", "--format", "json")
    assert code == 0 and json.loads(out)["results"]["H.links.facets"]["actual"] == 294


def test_triangulation_emit_round_trip(tmp_path, capsys):
    code, out = run(capsys, "triangulation", "--dataset", "CP2_min", "--emit")
    assert code == 0
    body = out.split("[", 1)[0]
    p = tmp_path / "cp2.txt"
    p.write_text(body)
    code, out = run(capsys, "triangulation", "--file", str(p), "--format", "json")
    assert code == 0 and json.loads(out)["results"]["f"]["actual"] == [9, 36, 84, 90, 36]


def test_euler_explicit_point(capsys):
    code, out = run(capsys, "euler", "--algebra", "C", "--point", "2/3,-5", "--format", "json")
    assert code == 0 and json.loads(out)["results"]["C.euler.values"]["actual"] == [3]


def test_invariants_real_case_fails(capsys):
    code, out = run(capsys, "invariants", "--algebra", "R", "--format", "json")
    d = json.loads(out)
    assert code == 1 and d["failures"] == ["R.invariants.pattern"]


def test_highrank(capsys):
    code, out = run(capsys, "highrank", "--a", "4", "--n", "3", "--format", "json")
    assert code == 0


def test_verify_triangulations_deterministic(capsys):
    runs = []
    for _ in range(2):
        code, out = run(capsys, "verify", "triangulations", "--format", "json", "--seed", "3")
        d = json.loads(out)
        d.pop("elapsed_ms")
        runs.append((code, d))
    assert runs[0] == runs[1] and runs[0][0] == 0


def test_skip_optional_euler_is_usage_error(capsys):
    assert main(["euler", "--algebra", "O", "--skip-optional"]) == 2
