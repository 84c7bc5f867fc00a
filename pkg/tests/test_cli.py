import json
import subprocess
import sys
from fractions import Fraction

import pytest

import ivpoly.cli as cli
from ivpoly import f_table
from ivpoly.verify import CheckReport, Counterexample
from golden import GOLDEN_C, GOLDEN_LAMBDA, GOLDEN_Q


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def _expected_csv(rows, max_n):
    lines = ["n," + ",".join(f"k{k}" for k in range(max_n + 1))]
    for n, row in enumerate(rows):
        cells = [str(n)] + [str(v) for v in row] + [""] * (max_n - n)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def test_table_c_csv_matches_golden(capsys):
    code, out = run_cli(capsys, "table", "c", "--max-n", "10", "--format", "csv")
    assert code == 0
    assert out == _expected_csv(GOLDEN_C, 10)


def test_table_q_csv_matches_golden(capsys):
    code, out = run_cli(capsys, "table", "q", "--max-n", "10", "--format", "csv")
    assert code == 0
    assert out == _expected_csv(GOLDEN_Q, 10)


def test_table_default_format_is_markdown(capsys):
    code, out = run_cli(capsys, "table", "q", "--max-n", "0")
    assert code == 0
    assert out == "| n | k0 |\n|---|---|\n| 0 | 1 |\n"


def test_table_markdown_blank_above_diagonal(capsys):
    _, out = run_cli(capsys, "table", "c", "--max-n", "2")
    lines = out.splitlines()
    assert lines[0] == "| n | k0 | k1 | k2 |"
    assert lines[2] == "| 0 | 1 |  |  |"
    assert lines[4] == "| 2 | 1 | 2 | 1 |"


def test_table_f_json(capsys):
    code, out = run_cli(capsys, "table", "F", "--max-n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "F"
    assert payload["max_n"] == 4
    assert payload["rows"][4][2] == "11/12"
    # round trip: the serialized strings rebuild the exact table
    rebuilt = [[Fraction(entry) for entry in row] for row in payload["rows"]]
    assert rebuilt == [list(row) for row in f_table(4).rows]


def test_table_json_round_trips_to_same_output(capsys):
    _, first = run_cli(capsys, "table", "c", "--max-n", "6", "--format", "json")
    payload = json.loads(first)
    assert json.dumps(payload) + "\n" == first


def test_table_d_and_stirling_kinds(capsys):
    _, out = run_cli(capsys, "table", "d", "--max-n", "4", "--format", "csv")
    assert out.splitlines()[5] == "4,1,4,12,2,1"
    _, out = run_cli(capsys, "table", "stirling", "--max-n", "4", "--format", "csv")
    assert out.splitlines()[5] == "4,0,-6,11,-6,1"


def test_seq_lambda_matches_golden(capsys):
    code, out = run_cli(capsys, "seq", "lambda", "--max-n", "10")
    assert code == 0
    assert out.splitlines() == [str(v) for v in GOLDEN_LAMBDA]


def test_seq_lambda_factored(capsys):
    _, out = run_cli(capsys, "seq", "lambda", "--max-n", "10", "--factored")
    lines = out.splitlines()
    assert lines[0] == "1"
    assert lines[4] == "2^2 * 3"
    assert lines[-1] == "2^5 * 3^3 * 5^2 * 7"


def test_seq_lambda_json(capsys):
    _, out = run_cli(capsys, "seq", "lambda", "--max-n", "10", "--format", "json")
    assert json.loads(out) == [str(v) for v in GOLDEN_LAMBDA]


def test_seq_cn(capsys):
    _, out = run_cli(capsys, "seq", "cn", "--max-n", "6")
    assert out.splitlines() == ["1", "1", "2", "6", "12", "60", "60"]


def test_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "table", "c", "--max-n", "10", "--format", "csv")
    _, second = run_cli(capsys, "table", "c", "--max-n", "10", "--format", "csv")
    assert first == second


def test_module_invocation_byte_identical():
    argv = [sys.executable, "-m", "ivpoly", "table", "c", "--max-n", "8", "--format", "csv"]
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert b"\r" not in first.stdout
    assert first.stdout.endswith(b"\n")


def test_verify_named_check(capsys):
    code, out = run_cli(capsys, "verify", "lemma3", "--max-n", "30")
    assert code == 0
    assert out.startswith("lemma3: pass")


def test_verify_all_small_ranges(capsys):
    code, out = run_cli(capsys, "verify", "all", "--max-n", "6")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert all(": pass" in line for line in lines)


def test_verify_failure_exits_one(capsys, monkeypatch):
    broken = CheckReport("theorem1", "1 <= n <= 2", False, Counterexample("n=2", "1", "2"))
    monkeypatch.setattr(cli, "run_all", lambda config: [broken])
    code, out = run_cli(capsys, "verify", "all")
    assert code == 1
    assert "theorem1: FAIL" in out
    assert "n=2" in out


def test_verify_cap_exceeded_exits_three(capsys):
    code = cli.main(["verify", "proposition2", "--max-n", "20"])
    assert code == 3


def test_env_cap_is_honored(capsys, monkeypatch):
    monkeypatch.setenv("IVPOLY_ENUM_CAP", "5")
    assert cli.main(["verify", "proposition2", "--max-n", "6"]) == 3
    monkeypatch.setenv("IVPOLY_ENUM_CAP", "25")
    code, out = run_cli(capsys, "verify", "proposition2", "--max-n", "16")
    assert code == 0
    assert "proposition2: pass" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "x"],
        ["table", "c", "--format", "yaml"],
        ["table", "c", "--max-n", "-1"],
        ["seq", "cn", "--factored"],
        ["verify", "nosuch"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(argv)
    assert excinfo.value.code == 2


def test_invalid_env_cap_exits_two(monkeypatch, capsys):
    monkeypatch.setenv("IVPOLY_ENUM_CAP", "zero")
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["verify", "all"])
    assert excinfo.value.code == 2
