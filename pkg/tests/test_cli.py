"""Command-line interface: parsing, output formats, exit codes, determinism."""

import json

import pytest

from lrpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lr_pretty(capsys):
    code, out, err = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--nu", "1")
    assert code == 0
    assert out.strip() == "a_0 - a_1"


def test_lr_classical_value(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "1,1", "--mu", "1", "--nu", "2,1")
    assert code == 0
    assert out.strip() == "1"


def test_lr_zero_outside_support(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "2", "--mu", "1", "--nu", "5")
    assert code == 0
    assert out.strip() == "0"


def test_lr_all_methods_agree(capsys):
    code, out, _ = run(
        capsys, "lr", "--lambda", "1", "--mu", "1", "--nu", "1", "--method", "all"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert [ln.split(":")[0] for ln in lines] == [
        "theorem",
        "corollary",
        "alternating",
        "oracle",
    ]
    assert all(ln.endswith("a_0 - a_1") for ln in lines)


def test_lr_json(capsys):
    code, out, _ = run(
        capsys, "lr", "--lambda", "1", "--mu", "1", "--nu", "1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data == [
        {"coeff": "1", "vars": [[0, 1]]},
        {"coeff": "-1", "vars": [[1, 1]]},
    ]


def test_parse_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lr", "--lambda", "x", "--mu", "1", "--nu", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["lr", "--lambda", "1,2", "--mu", "1", "--nu", "1"])  # not a partition
    assert exc.value.code == 2


def test_pieri_stable_and_empty_partition(capsys):
    code, out, _ = run(capsys, "pieri", "--p", "2", "--e", "0", "--mu", "")
    assert code == 0
    assert out.strip() == "(1)*s[2]"


def test_pieri_tableau_out_of_range_exit_2(capsys):
    code, out, err = run(
        capsys, "pieri", "--p", "1", "--e", "5", "--mu", "1", "--method", "tableau"
    )
    assert code == 2
    assert "unsupported hypothesis" in err


def test_pieri_methods_agree(capsys):
    _, out_s, _ = run(capsys, "pieri", "--p", "2", "--e", "1", "--mu", "2,1")
    _, out_t, _ = run(
        capsys, "pieri", "--p", "2", "--e", "1", "--mu", "2,1", "--method", "tableau"
    )
    assert out_s == out_t


def test_schur(capsys):
    code, out, _ = run(capsys, "schur", "--lambda", "1", "--n", "2")
    assert code == 0
    assert out.strip() == "(1)*x_1 + (1)*x_2 + (-a_1 - a_2)"


def test_kostka_both_methods(capsys):
    code, out, _ = run(
        capsys,
        "kostka",
        "--kappa",
        "2",
        "--mu",
        "1",
        "--nu",
        "2,1",
        "--method",
        "both",
    )
    assert code == 0
    rec, tab = out.strip().split("\n")
    assert rec.split(": ", 1)[1] == tab.split(": ", 1)[1]


def test_classical(capsys):
    code, out, _ = run(
        capsys, "classical", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"
    )
    assert code == 0
    assert out.strip() == "2"


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-weight", "2")
    assert code == 0
    assert out.count("PASS") == 4
    assert "FAIL" not in out


def test_verify_deterministic_across_threads(capsys, monkeypatch):
    code, out1, _ = run(capsys, "verify", "--suite", "ring", "--max-weight", "2")
    assert code == 0
    monkeypatch.setenv("LRPOLY_THREADS", "4")
    code, out2, _ = run(capsys, "verify", "--suite", "ring", "--max-weight", "2")
    assert code == 0
    assert out1 == out2


def test_verify_involutions_reports_aggregates(capsys):
    code, out, _ = run(capsys, "verify-involutions", "--max-weight", "2")
    assert code == 0
    assert out.strip().endswith("PASS")
    assert "kappa=" in out and "row=" in out


def test_output_byte_deterministic(capsys):
    args = ("lr", "--lambda", "2,1", "--mu", "2", "--nu", "3", "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
