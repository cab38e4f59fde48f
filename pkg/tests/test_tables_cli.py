from __future__ import annotations

import json

import pytest

from mvparking import cli, tables


def test_report_table_arity_checked():
    with pytest.raises(ValueError):
        tables.ReportTable("x", ["a", "b"], [[1]])


def test_bounds_table_golden():
    t = tables.bounds_table(5)
    assert t.headers == ["n", "subgraphs", "p2free", "valid", "hs"]
    assert t.rows == [
        [1, 1, 1, 1, 1],
        [2, 2, 2, 2, 2],
        [3, 6, 5, 4, 4],
        [4, 24, 15, 9, 8],
        [5, 120, 52, 21, 16],
    ]


def test_bipartite_table_golden_small():
    t = tables.bipartite_table(3, 3)
    assert t.rows == [[1, 2, 3, 4], [2, 4, 7, 12], [3, 8, 16, 30]]


def test_dec_vs_split_table_golden_small():
    t = tables.dec_vs_split_table(6)
    assert t.column("n") == [3, 4, 5, 6]
    assert t.column("dec") == [4, 9, 21, 51]
    assert t.column("split") == [3, 8, 20, 51]


def test_conjecture_table_small():
    t = tables.conjecture_table(5)
    by_n = {row[0]: row for row in t.rows}
    assert by_n[5][t.headers.index("max_fibre")] == 21
    assert by_n[5][t.headers.index("split_fibre")] == 20
    assert by_n[5][t.headers.index("split_is_max")] == "no"
    assert by_n[4][t.headers.index("argmax_count")] == 2


def test_csv_round_trip():
    t = tables.bounds_table(4)
    text = tables.render_csv(t)
    assert text.endswith("\n") and "\r" not in text
    assert '"' not in text
    headers, rows = tables.parse_csv(text)
    assert headers == t.headers
    assert rows == t.rows


def test_render_json_and_pretty():
    t = tables.bounds_table(3)
    data = json.loads(tables.render_json(t))
    assert data["rows"] == t.rows
    assert data["metadata"]["max_n"] == 3
    pretty = tables.render_pretty(t)
    assert "subgraphs" in pretty and "# bounds" in pretty


def test_jobs_do_not_change_results():
    assert tables.bounds_table(5, jobs=2).rows == tables.bounds_table(5).rows
    assert tables.dec_vs_split_table(5, jobs=2).rows == tables.dec_vs_split_table(5).rows


# --- CLI ---------------------------------------------------------------


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_outcome(capsys):
    code, out, _ = run_cli(capsys, "outcome", "--model", "mvp", "-p", "3,1,1,2")
    assert code == 0 and out.strip() == "3412"
    code, out, _ = run_cli(capsys, "outcome", "--model", "classical", "-p", "3112")
    assert code == 0 and out.strip() == "2314"
    code, out, _ = run_cli(capsys, "outcome", "--model", "mvp", "-p", "1,2,3")
    assert code == 0 and out.strip() == "123"


def test_cli_outcome_trace_and_json(capsys):
    code, out, _ = run_cli(capsys, "outcome", "--model", "mvp", "-p", "3,1,1,2", "--trace")
    assert code == 0
    assert out.splitlines() == [
        "3412",
        "bump: car 2 from spot 1 to spot 2",
        "bump: car 2 from spot 2 to spot 4",
    ]
    code, out, _ = run_cli(capsys, "outcome", "--model", "mvp", "-p", "3,1,1,2",
                           "--format", "json")
    data = json.loads(out)
    assert data["outcome"] == "3412" and data["bumps"] == [[2, 1, 2], [2, 2, 4]]


def test_cli_outcome_rejects_non_pf(capsys):
    code, out, err = run_cli(capsys, "outcome", "--model", "mvp", "-p", "2,2")
    assert code == 2 and not out
    assert "not a parking function" in err


def test_cli_fibre(capsys):
    code, out, _ = run_cli(capsys, "fibre", "--perm", "312")
    assert code == 0
    assert out.splitlines() == ["1,1,1", "1,3,1", "2,1,1", "2,3,1", "size 4"]
    code, out, _ = run_cli(capsys, "fibre", "--perm", "312", "--method", "both")
    assert code == 0 and "PASS" in out
    code, out, _ = run_cli(capsys, "fibre", "--perm", "123")
    assert out.splitlines() == ["1,2,3", "size 1"]
    code, out, _ = run_cli(capsys, "fibre", "--perm", "7654321", "--method", "subgraph")
    assert code == 0 and out.splitlines()[-1] == "size 127"


def test_cli_fibre_csv_round_trip(capsys):
    code, out, _ = run_cli(capsys, "fibre", "--perm", "312", "--format", "csv")
    assert code == 0
    headers, rows = tables.parse_csv(out)
    assert headers == ["p1", "p2", "p3"]
    assert rows == [[1, 1, 1], [1, 3, 1], [2, 1, 1], [2, 3, 1]]


def test_cli_fibre_brute_cap(capsys):
    code, _, err = run_cli(capsys, "fibre", "--perm", "87654321", "--method", "brute")
    assert code == 2 and "cap" in err


def test_cli_motzkin(capsys):
    code, out, _ = run_cli(capsys, "motzkin", "phi", "-p", "2,2,1,4,3,6,4,6")
    assert code == 0 and out.strip() == "HUHUDUDD"
    code, out, _ = run_cli(capsys, "motzkin", "inverse", "--path", "HH")
    assert code == 0 and out.strip() == "1,2"
    code, out, _ = run_cli(capsys, "motzkin", "rep", "-p", "1,1,2")
    assert code == 0 and out.strip() == "1,2,1"
    code, out, _ = run_cli(capsys, "motzkin", "noncross", "-n", "5", "--count")
    assert code == 0 and out.strip() == "21"
    code, out, _ = run_cli(capsys, "motzkin", "noncross", "-n", "3")
    assert sorted(out.splitlines()) == ["", "1-2", "1-3", "2-3"]


def test_cli_motzkin_errors(capsys):
    code, _, err = run_cli(capsys, "motzkin", "inverse", "--path", "DU")
    assert code == 2 and "Motzkin" in err
    code, _, err = run_cli(capsys, "motzkin", "phi")
    assert code == 2


def test_cli_sandpile(capsys):
    code, out, _ = run_cli(capsys, "sandpile", "minrec",
                           "-c", "11,9,5,8,1,9,4,8,4,9,10,0")
    assert code == 0 and out.strip() == "11,7,5,6,1,2,3,8,4,9,10,0"
    code, out, _ = run_cli(capsys, "sandpile", "cantop", "-c", "2,4,3,0,1")
    assert code == 0 and out.strip() == "23154"
    code, out, _ = run_cli(capsys, "sandpile", "stabilise", "-c", "0,0,0")
    assert code == 0 and out.strip() == "0,0,0"
    code, out, _ = run_cli(capsys, "sandpile", "stabilise", "-c", "3,0,0", "--trace")
    assert out.splitlines() == ["0,1,1", "toppled: 1"]
    code, out, _ = run_cli(capsys, "sandpile", "recurrent", "-c", "2,4,3,0,1")
    assert code == 0 and out.strip() == "recurrent"
    code, out, _ = run_cli(capsys, "sandpile", "recurrent", "-c", "0,0")
    assert code == 0 and out.strip() == "not recurrent"
    code, out, _ = run_cli(capsys, "sandpile", "minrec-classical", "-c", "1,3,3,2")
    assert code == 0 and out.strip() == "1,3,2,0"
    code, out, _ = run_cli(capsys, "sandpile", "mvp-outcome", "-p", "3,1,1,2")
    assert code == 0 and out.strip() == "3412"


def test_cli_sandpile_trace(capsys):
    code, out, _ = run_cli(capsys, "sandpile", "minrec",
                           "-c", "11,9,5,8,1,9,4,8,4,9,10,0", "--trace")
    lines = out.splitlines()
    assert lines[0] == "11,7,5,6,1,2,3,8,4,9,10,0"
    assert lines[1] == "iteration 1: duplicate at j=6, decrement c_2: 9 -> 7"
    assert len(lines) == 5


def test_cli_sandpile_contract_errors(capsys):
    code, _, err = run_cli(capsys, "sandpile", "minrec", "-c", "0,0")
    assert code == 2 and "not recurrent" in err
    code, _, err = run_cli(capsys, "sandpile", "cantop", "-c", "1,1,0")
    assert code == 2


def test_cli_table_csv_golden(capsys):
    code, out, _ = run_cli(capsys, "table", "bounds", "--max-n", "5", "--format", "csv")
    assert code == 0
    assert out == (
        "n,subgraphs,p2free,valid,hs\n"
        "1,1,1,1,1\n"
        "2,2,2,2,2\n"
        "3,6,5,4,4\n"
        "4,24,15,9,8\n"
        "5,120,52,21,16\n"
    )


def test_cli_table_guards(capsys):
    code, _, err = run_cli(capsys, "table", "bounds", "--max-n", "10")
    assert code == 2 and "guard" in err
    code, _, err = run_cli(capsys, "table", "dec-vs-split", "--max-n", "12")
    assert code == 2 and "guard" in err
    code, _, err = run_cli(capsys, "table", "bipartite", "--max-m", "8", "--max-n", "2")
    assert code == 2 and "guard" in err


def test_cli_table_force_overrides_guard(capsys):
    code, out, _ = run_cli(capsys, "table", "bounds", "--max-n", "10",
                           "--force", "--format", "csv")
    assert code == 0
    _, rows = tables.parse_csv(out)
    assert rows[-1] == [10, 3628800, 115975, 2188, 512]


def test_cli_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "thm-4.1", "--m", "6")
    assert code == 0 and "thm-4.1: PASS" in out
    code, out, _ = run_cli(capsys, "verify", "--suite", "thm-3.8", "--n", "5",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["passed"] is True


def test_cli_out_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = run_cli(capsys, "table", "bounds", "--max-n", "3",
                           "--format", "csv", "--out", str(target))
    assert code == 0 and not out
    headers, rows = tables.parse_csv(target.read_text(encoding="utf-8"))
    assert headers[0] == "n" and rows[2] == [3, 6, 5, 4, 4]


def test_cli_csv_rejected_for_scalars(capsys):
    code, _, err = run_cli(capsys, "outcome", "--model", "mvp", "-p", "1,1",
                           "--format", "csv")
    assert code == 2 and "csv" in err


def test_cli_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
    capsys.readouterr()
