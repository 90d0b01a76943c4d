import json

import numpy as np
import pytest

from iroa.cli import main
from iroa.constructions import rm_code
from iroa.corpus import hamming74, tetracode
from iroa.matrix import format_matrix
from iroa.oa import oa_from_code, parse_array


@pytest.fixture
def code_files(tmp_path):
    out = {}
    for name, C in [("rm13", rm_code(1, 3)), ("hamming", hamming74()), ("tetracode", tetracode())]:
        p = tmp_path / f"{name}.txt"
        p.write_text(format_matrix(C.gen, header="# code"))
        out[name] = p
    return out


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_rm(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, _, _ = run(["construct", "rm", "--r", 1, "--m", 3, "--out", path], capsys)
    lines = [l for l in path.read_text().splitlines() if not l.startswith("#")]
    assert code == 0 and lines[0] == "4 8 2"
    assert lines[1:] == ["1 0 1 0 1 0 1 0", "0 1 0 1 0 1 0 1", "0 0 1 1 0 0 1 1", "0 0 0 0 1 1 1 1"]
    assert '"seed":0' in path.read_text()


def test_construct_errors(capsys):
    code, _, err = run(["construct", "rm", "--r", 4, "--m", 3], capsys)
    assert code == 2 and "r <= m" in err
    code, _, _ = run(["construct", "grs", "--q", 6, "--n", 4, "--k", 2], capsys)
    assert code == 2


def test_construct_grs_and_grm(capsys):
    code, out, _ = run(["construct", "grs", "--q", 5, "--n", 4, "--k", 2], capsys)
    assert code == 0 and "2 4 5" in out
    code, out, _ = run(["construct", "grm", "--q", 3, "--r", 2, "--m", 2], capsys)
    assert code == 0 and "6 9 3" in out


def test_search_sdgrs(capsys):
    code, out, _ = run(["search", "sdgrs", "--q", 4, "--n", 4], capsys)
    assert code == 0 and "2 4 4" in out
    code, _, _ = run(["search", "sdgrs", "--q", 3, "--n", 4], capsys)
    assert code == 2


@pytest.mark.parametrize("name,expected", [
    ("rm13", {"d": 4, "d_dual": 4, "t": 3, "lambda": 2, "irredundant": True, "rho": 2}),
    ("hamming", {"d": 3, "t": 3, "irredundant": False}),
    ("tetracode", {"d": 3, "t": 2, "lambda": 1, "irredundant": True}),
])
def test_analyze_examples(code_files, capsys, name, expected):
    code, out, _ = run(["analyze", code_files[name]], capsys)
    report = json.loads(out)
    assert code == 0
    assert {k: report[k] for k in expected} == expected
    assert report["irredundant_methods"]["agree"]
    assert report["config"]["seed"] == 0 and report["version"]


def test_analyze_array_file(code_files, tmp_path, capsys):
    arr = tmp_path / "a.txt"
    run(["export", code_files["rm13"], "--out", arr], capsys)
    code, out, _ = run(["analyze", arr], capsys)
    report = json.loads(out)
    assert code == 0 and report["t"] == 3 and report["declared_matches"] and report["rho"] == 2


def test_analyze_cap_exit(code_files, capsys):
    code, _, err = run(["analyze", code_files["rm13"], "--cap-enum", 4], capsys)
    assert code == 3 and "enumeration cap" in err


def test_analyze_missing_file(capsys):
    code, _, _ = run(["analyze", "/nonexistent/file"], capsys)
    assert code == 2


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_export_roundtrip(code_files, tmp_path, capsys, fmt):
    for name, M in [("tetracode", 9), ("rm13", 16)]:
        a = tmp_path / f"{name}.{fmt}"
        assert run(["export", code_files[name], "--format", fmt, "--out", a], capsys)[0] == 0
        if fmt != "json":
            text = a.read_text()
            body = [l for l in text.splitlines() if not l.startswith("#")]
            assert len(body) == M
            if name == "tetracode":
                assert text.splitlines()[0] == "# IrOA M=9 n=4 q=3 t=2 lambda=1"
        b = tmp_path / f"{name}2.{fmt}"
        assert run(["export", a, "--format", fmt, "--out", b], capsys)[0] == 0
        c = tmp_path / f"{name}3.txt"
        run(["export", b, "--out", c], capsys)
        A0 = oa_from_code(tetracode() if name == "tetracode" else rm_code(1, 3))
        A1 = parse_array(c.read_text())
        assert np.array_equal(A0.rows, A1.rows) and (A0.t, A0.lam) == (A1.t, A1.lam)


def test_export_hamming_header_marks_plain_oa(code_files, capsys):
    _, out, _ = run(["export", code_files["hamming"]], capsys)
    assert out.startswith("# OA M=16 n=7 q=2 t=3 lambda=2")


def test_export_malformed(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("# IrOA M=2 n=2 q=2 t=1 lambda=1\n0 1\n")
    assert run(["export", p], capsys)[0] == 2


def test_verify_rm_exit_zero_and_files(tmp_path, capsys):
    code, out, _ = run(["verify", "--family", "rm", "--max-m", 4, "--out", tmp_path / "v"], capsys)
    assert code == 0 and "rm.iroa.irredundant" in out
    files = sorted(p.name for p in (tmp_path / "v").iterdir())
    assert "summary.json" in files and len(files) == 2 * 14 + 2
    one = json.loads((tmp_path / "v" / "rm-theorem_r=1_m=3.json").read_text())
    assert one["subject"] == "rm-theorem(r=1,m=3)" and one["config"]["seed"] == 0


def test_verify_mds_q7(capsys):
    code, out, _ = run(["verify", "--family", "mds", "--q", 7, "--max-n", 7, "--format", "json"], capsys)
    summary = json.loads(out)["summary"]
    assert code == 0 and summary["mds.singleton"]["holds"] == 15 and summary["mds.dual_mds"]["violated"] == 0


def test_verify_random_jobs_identical(capsys):
    outs = []
    for jobs in (1, 3):
        code, out, _ = run(["verify", "--family", "random", "--count", 15, "--jobs", jobs, "--format", "json"], capsys)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["config"]["seed"] == 7


def test_verify_exit_one_on_violation(monkeypatch, capsys):
    from iroa import lab

    def broken(*a, **k):
        cert = lab.Certificate("fake")
        cert.check("fake.claim", "1 = 2", False, 1, 2)
        return [cert]

    monkeypatch.setattr(lab, "index_one_suite", broken)
    code, _, err = run(["verify", "--family", "index-one"], capsys)
    assert code == 1 and "VIOLATED fake fake.claim" in err
