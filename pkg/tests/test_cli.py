import json

import pytest

from permrel.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nf_line(capsys):
    code, out, _ = run(capsys, "nf", "-n", "3", "2 3 1")
    assert code == 0
    assert out == "1 2 3 | i=0 eps=1 j=0 b=ε | in P: yes\n"


def test_nf_outside_ideal(capsys):
    code, out, _ = run(capsys, "nf", "-n", "3", "2 1")
    assert code == 0
    assert out == "2 1 | i=0 eps=0 j=0 b=2 1 | in P: no\n"


def test_eq_lines(capsys):
    code, out, _ = run(capsys, "eq", "-n", "3", "2 3 1", "3 1 2")
    assert (code, out) == (0, "equal\n")
    code, out, _ = run(capsys, "eq", "-n", "3", "1 2", "2 1")
    assert (code, out) == (0, "not equal\n")


def test_mul_line(capsys):
    code, out, _ = run(capsys, "mul", "-n", "3", "2 1", "2 3")
    assert code == 0
    assert out.startswith("1 2 3 2 | ")


def test_phi_lines(capsys):
    code, out, _ = run(capsys, "phi", "-n", "3", "1 2 3")
    assert (code, out) == (0, "1 ; c^1\n")
    code, out, _ = run(capsys, "phi", "-n", "3", "3")
    assert (code, out) == (0, "x2^-1 x1^-1 ; c^1\n")
    code, out, _ = run(capsys, "phi", "-n", "3", "")
    assert (code, out) == (0, "1 ; c^0\n")


def test_growth_sequence(capsys):
    code, out, _ = run(capsys, "growth", "-n", "3", "--h", "cyclic", "--max-len", "6")
    assert code == 0
    assert out == "1,3,9,25,69,189,517\n"


def test_growth_json_round_trips(capsys):
    code, out, _ = run(
        capsys, "growth", "-n", "3", "--h", "sym", "--max-len", "3", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["counts"] == [1, 3, 9, 22]


def test_series_table(capsys):
    code, out, _ = run(capsys, "series", "-n", "3", "--max-len", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("length,")
    assert lines[4] == "3,25,24,25,24"
    assert lines[-1] == "three-way agreement"


def test_confluence_report(capsys):
    code, out, _ = run(capsys, "confluence", "-n", "3", "--max-m", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n=3 max_m=4: 44 overlaps, all joinable"
    assert "  pull-pull: 0" in lines
    assert "  rot-rot: 2" in lines


def test_confluence_illegal_control_exits_nonzero(capsys):
    code, out, _ = run(capsys, "confluence", "-n", "3", "--max-m", "2", "--include-illegal")
    assert code == 1
    assert "malformed instances: 9" in out.splitlines()


def test_explore_summary(capsys):
    code, out, _ = run(capsys, "explore", "-n", "3", "--h", "sym", "--max-len", "3")
    assert code == 0
    assert out.splitlines() == [
        "length,classes,singletons",
        "0,1,1",
        "1,3,3",
        "2,9,9",
        "3,22,21",
    ]


def test_explore_table_dump(capsys):
    code, out, _ = run(
        capsys, "explore", "-n", "3", "--h", "cyclic", "--max-len", "3", "--table"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "word,class-representative"
    assert "2 3 1,1 2 3" in lines
    assert len(lines) == 28


def test_reduce_report(capsys):
    code, out, _ = run(capsys, "reduce", "-n", "4", "--h", "sym")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "H1 order 6; induced relations: 5 (deduplicated)"
    assert "  1 2 3 = 2 1 3" in lines


def test_reduce_free_case(capsys):
    code, out, _ = run(capsys, "reduce", "-n", "3", "--h", "cyclic")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "H1 order 1; induced relations: 0 (deduplicated)"
    assert lines[-1] == "free of rank 2"


def test_rho_line(capsys):
    code, out, _ = run(
        capsys, "rho", "-n", "3", "--h", "sym", "--length", "2", "--power", "1"
    )
    assert code == 0
    assert out == "classes at length 2 with central power 1: 6 (plain: 9)\n"


def test_sym_identity_lines(capsys):
    code, out, _ = run(capsys, "sym-identity", "-n", "3", "-i", "1", "-j", "2")
    assert (code, out) == (0, "holds\n")
    code, out, _ = run(
        capsys, "sym-identity", "-n", "3", "-i", "1", "-j", "2", "--h", "cyclic"
    )
    assert (code, out) == (0, "fails\n")


def test_budget_refusal_exit_code(capsys):
    code, out, err = run(
        capsys, "growth", "-n", "3", "--max-len", "12", "--budget", "1000"
    )
    assert code == 3
    assert out == ""
    assert "needs 2187 words, budget allows 1000" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "nf", "-n", "3", "4 1")
    assert code == 2
    assert "outside" in err


def test_validation_error_exit_code(capsys):
    code, _, err = run(capsys, "nf", "-n", "2", "1")
    assert code == 2
    assert err.startswith("error:")


def test_unknown_command_is_usage_error(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "confluence", "-n", "3", "--max-m", "3", "--json")
    second = run(capsys, "confluence", "-n", "3", "--max-m", "3", "--json")
    assert first == second
    assert json.loads(first[1])["total"] == 27


def test_acceptance_subset(capsys):
    code, out, _ = run(capsys, "acceptance", "--only", "2,8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("criterion 2: PASS")
    assert lines[1].startswith("criterion 8: PASS")
    assert lines[2] == "2/2 criteria passed"


def test_acceptance_json_subset(capsys):
    code, out, _ = run(capsys, "acceptance", "--only", "5", "--json")
    assert code == 0
    (entry,) = json.loads(out)
    assert entry["number"] == 5
    assert entry["passed"] is True
    assert "seconds" not in entry


def test_acceptance_rejects_unknown_criteria(capsys):
    code, _, err = run(capsys, "acceptance", "--only", "11")
    assert code == 2
    assert "unknown criteria" in err
    code, _, err = run(capsys, "acceptance", "--only", "two")
    assert code == 2


def test_json_flag_round_trips_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "-n", "4", "--h", "sym", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["stabilizer_order"] == 6
    assert data["relation_count"] == 5
