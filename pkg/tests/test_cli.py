"""Command-line interface: dispatch, exit codes, JSON and determinism."""

import json

from quiddity.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--length", "6")
    assert code == 0
    assert "<1,2,3,1,2,3>" in out


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--length", "6", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3
    assert [1, 3, 1, 3, 1, 3] in data["cycles"]


def test_check_member_and_non_member(capsys):
    code, out, _ = run(capsys, "check", "--cycle", "1,3,2,4,1,2,2,4,2")
    assert code == 0 and "is a quiddity cycle" in out
    code, out, _ = run(capsys, "check", "--cycle", "2,2,2")
    assert code == 1 and "is not" in out


def test_check_bad_input(capsys):
    code, _, err = run(capsys, "check", "--cycle", "2,x,2")
    assert code == 2 and "error" in err


def test_cover_step_builtin(tmp_path, capsys):
    out_file = tmp_path / "pair.json"
    code, out, _ = run(capsys, "cover-step", "--in", "builtin:base", "--out", str(out_file))
    assert code == 0
    data = json.loads(out_file.read_text())
    assert sorted(data["F"]) == [[1, 2], [1, 3, 1], [2, 1]]
    assert [1, 2, 2, 1, 3] in data["E"]


def test_cover_step_accepts_file_roundtrip(tmp_path, capsys):
    first = tmp_path / "one.json"
    second = tmp_path / "two.json"
    run(capsys, "cover-step", "--in", "builtin:base", "--out", str(first))
    code, _, _ = run(capsys, "cover-step", "--in", str(first), "--out", str(second))
    assert code == 0
    data = json.loads(second.read_text())
    assert min(len(f) for f in data["F"]) >= 3


def test_verify_cover_builtin(capsys):
    code, out, _ = run(capsys, "verify-cover", "--pair", "builtin:cor12", "--max", "9")
    assert code == 0 and "0 violations" in out


def test_verify_cover_unknown_builtin(capsys):
    code, _, err = run(capsys, "verify-cover", "--pair", "builtin:nope", "--max", "5")
    assert code == 2 and "unknown builtin" in err


def test_verify_thm16(capsys):
    code, out, _ = run(capsys, "verify-thm16", "--max", "9")
    assert code == 0
    assert "0 violations" in out


def test_charseq_root_of_unity(capsys):
    code, out, _ = run(
        capsys, "charseq", "--zeta", "9", "--q1", "6", "--q", "8", "--q2", "6"
    )
    assert code == 0
    assert "(2,2,5)" in out
    assert "<--2-->" in out and "<--5-->" in out


def test_charseq_generic_triple(capsys):
    code, out, _ = run(capsys, "charseq", "--triple", "q^1,q^-4,q^4")
    assert code == 0
    assert "(1,4)" in out and "chain" in out


def test_charseq_needs_arguments(capsys):
    code, _, err = run(capsys, "charseq", "--zeta", "9", "--q1", "6")
    assert code == 2


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--window", "2,2,5", "--bound", "9")
    assert code == 0
    assert "(z9^6,z9^8,z9^6)" in out or "(z9,z9^4,z9^6)" in out


def test_solve_none_found(capsys):
    code, out, _ = run(capsys, "solve", "--window", "7,7,7", "--bound", "4")
    assert code == 1


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--nmax", "6")
    assert code == 0
    assert "row" in out


def test_classify_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "classify", "--nmax", "5", "--json")
    code2, out2, _ = run(capsys, "classify", "--nmax", "5", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    json.loads(out1)


def test_generic(capsys):
    code, out, _ = run(capsys, "generic")
    assert code == 0
    assert "row 12" in out and "row 14" in out


def test_decompose_affine_period(capsys):
    code, out, _ = run(capsys, "decompose", "--period", "1,4")
    assert code == 0
    assert "[1, 1, 1]" in out


def test_decompose_non_affine_period(capsys):
    code, out, _ = run(capsys, "decompose", "--period", "2,2,5")
    assert code == 1
    assert "not affine" in out


def test_verify_cor15(capsys):
    code, out, _ = run(capsys, "verify-cor15", "--nmax", "6")
    assert code == 0


def test_json_outputs_single_document(capsys):
    for argv in [
        ["enumerate", "--length", "5", "--json"],
        ["check", "--cycle", "0,0", "--json"],
        ["verify-cover", "--pair", "builtin:ends", "--max", "8", "--json"],
        ["verify-thm16", "--max", "7", "--json"],
        ["charseq", "--zeta", "3", "--q1", "1", "--q", "1", "--q2", "1", "--json"],
        ["solve", "--window", "2,2,2", "--bound", "3", "--json"],
        ["decompose", "--period", "2", "--json"],
        ["generic", "--json"],
    ]:
        code = main(argv)
        out = capsys.readouterr().out
        json.loads(out)
        assert code in (0, 1)
