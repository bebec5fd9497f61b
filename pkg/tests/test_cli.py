import json

import pytest

from nctl import cli, serialize


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("command", ["enumerate", "tables", "stdforms", "hasse"])
def test_json_outputs_validate(capsys, command):
    code, out, _ = run(capsys, command, "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    serialize.validate(command, data)
    assert data["n"] == 3


def test_cycle_and_word_agree(capsys):
    _, by_cycle, _ = run(capsys, "tables", "--cycle", "1,3,4,2")
    _, by_word, _ = run(capsys, "tables", "--word", "2,1,3")
    assert by_cycle == by_word
    assert by_cycle.startswith("c = (1,3,4,2)")


def test_output_is_deterministic(capsys):
    first = run(capsys, "stdforms", "--cycle", "1,2,5,4,3", "--format", "json")
    second = run(capsys, "stdforms", "--cycle", "1,2,5,4,3", "--format", "json")
    assert first == second


def test_csv_round_trip(capsys):
    code, out, _ = run(capsys, "basechange", "--n", "2", "--format", "csv")
    assert code == 0
    rows = serialize.from_csv(out)
    assert len(rows) == 6 and all(len(r) == 6 for r in rows)


def test_basechange_json(capsys, tmp_path):
    target = tmp_path / "bc.json"
    code, out, _ = run(capsys, "basechange", "--cycle", "1,3,4,2", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    serialize.validate("basechange", data)
    assert data["report"]["triangular"] and data["report"]["rank"] == 14


def test_hasse_dot(capsys):
    code, out, _ = run(capsys, "hasse", "--n", "3")
    assert code == 0
    assert out.startswith('digraph "V3"')
    assert out.count("->") == 21


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n-verify", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert len(data["checks"]) == 10


@pytest.mark.parametrize(
    "argv",
    [
        ["tables", "--n", "4", "--cycle", "1,3,4,2"],
        ["tables", "--cycle", "1,3,2,4"],
        ["tables", "--word", "1,1"],
        ["basechange", "--n", "7"],
        ["tables", "--n", "9"],
        ["tables", "--n", "0"],
        ["hasse", "--format", "csv"],
        ["tables", "--cycle", "1,2", "--word", "1"],
        ["bogus"],
        ["tables", "--cycle", "a,b"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err
