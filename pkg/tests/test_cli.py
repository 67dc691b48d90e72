import json

import pytest

from locdist.cli import EXIT_CAP, EXIT_OK, EXIT_PARSE, EXIT_VIOLATED, main


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_compute_graph6_file(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("Bw\nF?owW\n")
    assert main(["compute", "--input", str(f)]) == EXIT_OK
    rows = records(capsys.readouterr().out)
    assert [(r["n"], r["chi"], r["chi_L"], r["chi_D"]) for r in rows][0] == (3, 3, 3, 3)
    assert rows[1]["n"] == 7


def test_compute_edge_list_p7(tmp_path, capsys):
    f = tmp_path / "p7.txt"
    f.write_text("# path on seven vertices\n7\n" + "".join(f"{i} {i + 1}\n" for i in range(6)))
    assert main(["compute", "--input", str(f), "--format", "edges"]) == EXIT_OK
    (row,) = records(capsys.readouterr().out)
    assert (row["chi"], row["chi_L"], row["chi_D"], row["dim"]) == (2, 3, 3, 1)


def test_empty_input_is_ok(tmp_path, capsys):
    f = tmp_path / "empty.g6"
    f.write_text("")
    assert main(["compute", "--input", str(f)]) == EXIT_OK
    assert capsys.readouterr().out == ""


def test_parse_error_names_line(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_text("Bw\n!!bad\n")
    assert main(["compute", "--input", str(f)]) == EXIT_PARSE
    captured = capsys.readouterr()
    assert "line 2" in captured.err and captured.out == ""


def test_edge_list_parse_error(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3\n0 1\n1 x\n")
    assert main(["compute", "--input", str(f), "--format", "edges"]) == EXIT_PARSE
    assert "line 3" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["compute", "--input", str(tmp_path / "nope.g6")]) == EXIT_PARSE


def test_cap_overflow(capsys):
    assert main(["compute", "--family", "path", "--params", "20"]) == EXIT_CAP
    assert "cap" in capsys.readouterr().err
    assert main(["compute", "--family", "path", "--params", "20", "--cap", "20"]) == EXIT_OK


def test_env_cap(monkeypatch, capsys):
    monkeypatch.setenv("LOCDIST_CAP", "5")
    assert main(["compute", "--family", "path", "--params", "6"]) == EXIT_CAP


def test_sweep_out_of_range():
    assert main(["enumerate", "--sweep", "8"]) == EXIT_CAP
    assert main(["enumerate", "--sweep", "10", "--trees"]) == EXIT_CAP


def test_enumerate_counts(capsys):
    assert main(["enumerate", "--sweep", "5"]) == EXIT_OK
    assert len(capsys.readouterr().out.split()) == 1 + 1 + 2 + 6 + 21
    assert main(["enumerate", "--sweep", "9", "--trees"]) == EXIT_OK
    assert len(capsys.readouterr().out.split()) == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47


def test_construct(capsys):
    assert main(["construct", "--family", "spider", "--params", "3,5", "--format", "edges"]) == EXIT_OK
    lines = [ln for ln in capsys.readouterr().out.splitlines() if ln and not ln.startswith("#")]
    assert lines[0] == "11" and len(lines) == 1 + 10
    assert main(["construct", "--family", "spider", "--params", "3,7"]) == EXIT_PARSE


def test_verify_p7_example(capsys):
    assert main(["verify", "--family", "path", "--params", "7", "--theorem", "Ex-P7"]) == EXIT_OK
    (rec,) = records(capsys.readouterr().out)
    assert rec["theorem_id"] == "Ex-P7" and rec["status"] == "holds"


def test_verify_spider_discrepancy_warns(capsys):
    assert main(["verify", "--family", "spider", "--params", "3,5"]) == EXIT_OK
    captured = capsys.readouterr()
    (rec,) = records(captured.out)
    assert rec["flag"] == "discrepancy" and rec["evidence"]["chi_L"] == 4
    assert "warning" in captured.err


def test_verify_spider_above_cap():
    assert main(["verify", "--family", "spider", "--params", "4,4"]) == EXIT_CAP


def test_verify_sweep_deterministic_across_workers(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["verify", "--sweep", "5", "--out", str(a)]) == EXIT_OK
    assert main(["verify", "--sweep", "5", "--workers", "2", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    recs = records(a.read_text())
    assert not [r for r in recs if r["status"] == "violated" and not r.get("flag")]


def test_verify_violation_exit_code(monkeypatch, capsys):
    import locdist.lab as lab

    def broken(g, r=None):
        return lab.TheoremVerdict("C2.5", "Bw", lab.VIOLATED, {})

    monkeypatch.setitem(lab._CHECKS, "C2.5", broken)
    assert main(["verify", "--family", "complete", "--params", "3", "--theorem", "C2.5"]) == EXIT_VIOLATED
    assert "error" in capsys.readouterr().err


def test_table_output(capsys):
    assert main(["compute", "--family", "cycle", "--params", "5", "--table"]) == EXIT_OK
    head = capsys.readouterr().out.splitlines()[0]
    assert head.split()[:3] == ["graph6", "n", "edges"]


def test_exactly_one_source(capsys):
    assert main(["compute"]) == EXIT_PARSE
    with pytest.raises(SystemExit):
        main(["frobnicate"])
