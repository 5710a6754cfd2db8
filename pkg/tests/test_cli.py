"""Tests for the command line interface."""

import csv
import io
import json

import pytest

from parrywords.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_words_table(capsys):
    code, out, _ = run(capsys, "words", "102", "--upto", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n\tlength\tword"
    assert lines[1] == "0\t1\t0"
    assert lines[-1] == "5\t15\t012000101012012"


def test_words_prefix(capsys):
    code, out, _ = run(capsys, "words", "12", "--prefix", "8")
    assert (code, out.strip()) == (0, "01000101")
    code, out, _ = run(capsys, "words", "102", "--prefix", "0")
    assert (code, out.strip()) == (0, "ε")


def test_rep_and_greedy(capsys):
    code, out, _ = run(capsys, "rep", "102", "14")
    assert (code, out.strip()) == (0, "10110")
    code, out, _ = run(capsys, "rep", "102", "14", "--greedy")
    assert (code, out.strip()) == (0, "11000")
    code, out, _ = run(capsys, "rep", "102", "0")
    assert (code, out.strip()) == (0, "ε")


def test_val(capsys):
    code, out, _ = run(capsys, "val", "102", "1011")
    assert (code, out.strip()) == (0, "8")
    code, out, _ = run(capsys, "val", "102", "ε")
    assert (code, out.strip()) == (0, "0")


def test_val_outside_language_is_domain_error(capsys):
    code, out, err = run(capsys, "val", "102", "11")
    assert code == 2
    assert "error:" in err
    code, out, _ = run(capsys, "val", "102", "11", "--unchecked")
    assert (code, out.strip()) == (0, "3")


def test_automaton_text_and_dot(capsys):
    code, out, _ = run(capsys, "automaton", "102")
    assert code == 0
    assert out.strip().splitlines() == [
        "0 -0-> 0", "0 -1-> 1", "1 -0-> 2", "2 -0-> 0", "2 -1-> 0",
    ]
    code, dot, _ = run(capsys, "automaton", "102", "--dot")
    assert code == 0
    assert dot.count("->") == 6  # five transitions plus the start arrow
    assert dot == run(capsys, "automaton", "102", "--dot")[1]


def test_attractor_default_and_minimal(capsys):
    code, out, _ = run(capsys, "attractor", "12", "8")
    assert (code, out.strip()) == (0, "2 4 8")
    code, out, _ = run(capsys, "attractor", "12", "8", "--minimal")
    assert (code, out.strip()) == (0, "3 6")
    code, out, _ = run(capsys, "attractor", "12", "8", "--minimal", "--zero-based")
    assert (code, out.strip()) == (0, "2 5")
    code, out, _ = run(capsys, "attractor", "23", "9")
    assert (code, out.strip()) == (0, "1 3 9")


def test_attractor_scope_error(capsys):
    code, _, err = run(capsys, "attractor", "102", "9")
    assert code == 2
    assert "error:" in err


def test_attractor_minimal_cap(capsys):
    code, _, err = run(capsys, "attractor", "12", "500", "--minimal")
    assert code == 2
    code, out, _ = run(capsys, "attractor", "12", "210", "--minimal", "--cap", "210")
    assert code == 0


def test_profile_table(capsys):
    code, out, _ = run(capsys, "profile", "12", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m\tsize\tpositions"
    assert lines[1] == "1\t1\t1"
    assert lines[8] == "8\t2\t3,6"


def test_profile_truncation_marker(capsys):
    code, out, _ = run(capsys, "profile", "12", "400", "--cap", "6")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("# truncated")


def test_check_text(capsys):
    code, out, _ = run(capsys, "check", "1011")
    assert code == 0
    assert "holds: true" in out
    assert "root: 10" in out
    assert "power: 2" in out
    assert "cprime: 11" in out
    code, out, _ = run(capsys, "check", "102")
    assert code == 0
    assert "holds: false" in out
    assert "root:" not in out


def test_json_outputs_round_trip(capsys):
    for argv in (["words", "102", "--upto", "3", "--json"],
                 ["rep", "102", "14", "--json"],
                 ["val", "102", "1011", "--json"],
                 ["automaton", "102", "--json"],
                 ["attractor", "12", "8", "--json"],
                 ["profile", "12", "6", "--json"],
                 ["check", "1011", "--json"]):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert json.loads(json.dumps(payload)) == payload


def test_json_attractor_fields(capsys):
    _, out, _ = run(capsys, "attractor", "12", "8", "--json")
    payload = json.loads(out)
    assert payload["positions"] == [2, 4, 8]
    assert payload["size"] == 3
    assert payload["minimal"] is False


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, "sweep", "--k", "2..3", "--digit-max", "2",
                       "--mmax", "20")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# schema: 1"
    rows = list(csv.DictReader(lines[1:]))
    assert len(rows) == 4 + 2 * 3 * 2
    for row in rows:
        assert {row["frac_power_ok"], row["ceiling_ok"],
                row["max_conjugate"], row["greedy"]} in ({"true"}, {"false"})
        if row["greedy"] == "true":
            assert row["conjecture"] == "agree"
            assert row["minimal_family"] in ("true", "false")
        else:
            assert row["conjecture"] == ""
            assert row["minimal_family"] == ""


def test_sweep_json_and_out_file(tmp_path, capsys):
    target = tmp_path / "rows.json"
    code, out, _ = run(capsys, "sweep", "--k", "2", "--digit-max", "1",
                       "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["schema"] == 1
    assert [r["c"] for r in payload["rows"]] == ["11"]


def test_sweep_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "sweep", "--k", "2", "--digit-max", "2",
                       "--mmax", "10")
    _, parallel, _ = run(capsys, "sweep", "--k", "2", "--digit-max", "2",
                         "--mmax", "10", "--jobs", "2")
    assert serial == parallel


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rep", "102"])  # missing n
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1


def test_domain_errors_exit_2(capsys):
    code, _, err = run(capsys, "words", "021", "--upto", "2")
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "rep", "102", "--", "-5")
    assert code == 2
