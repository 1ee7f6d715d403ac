import json
import random

import pytest

from helpers import random_partition
from oddmaps import KData, Mismatch, ParityReport, Partition, k_data
from oddmaps.cli import main, parse_partition_text, render_kdata

P = Partition


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse errors
        code = exc.code
    out = capsys.readouterr().out
    return code, out


def test_parse_partition_text():
    assert parse_partition_text("[5,4,2,2,1,1]") == P((5, 4, 2, 2, 1, 1))
    assert parse_partition_text("[]") == P(())
    assert parse_partition_text(" [3, 1] ") == P((3, 1))
    with pytest.raises(ValueError, match="weakly decreasing"):
        parse_partition_text("[2,3]")
    for bad in ("5,4", "[5,4", "[a]", "[1,]"):
        with pytest.raises(ValueError):
            parse_partition_text(bad)


def test_parse_render_roundtrip():
    rng = random.Random(75)
    for _ in range(1000):
        lam = random_partition(rng, 50)
        assert parse_partition_text(str(lam)) == lam


def test_render_kdata_goldens():
    block = render_kdata(k_data(P((5, 4, 2, 2, 1, 1)), 2))
    assert block == "      [1]\n    [] [1]\n[1,1] [1] [] []"
    assert [line.strip() for line in block.splitlines()] == [
        "[1]",
        "[] [1]",
        "[1,1] [1] [] []",
    ]
    block = render_kdata(k_data(P((1,)), 1))
    assert [line.strip() for line in block.splitlines()] == ["[1]", "[] []"]
    block = render_kdata(k_data(P((3, 2, 2, 2, 1, 1)), 2))
    assert [line.strip() for line in block.splitlines()] == [
        "[1]",
        "[] [1]",
        "[1,1] [] [] []",
    ]


def test_fk_command(capsys):
    code, out = run_cli(capsys, "fk", "--n", "15", "--k", "2", "--lambda", "[5,4,2,2,1,1]")
    assert code == 0
    assert out.strip() == "[3,2,2,2,1,1]"
    code, out = run_cli(
        capsys, "fk", "--n", "15", "--k", "2", "--lambda", "[5,4,2,2,1,1]",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "n": 15,
        "k": 2,
        "lambda": [5, 4, 2, 2, 1, 1],
        "result": [3, 2, 2, 2, 1, 1],
    }


def test_fiber_command(capsys):
    code, out = run_cli(capsys, "fiber", "--n", "6", "--k", "2", "--mu", "[2]")
    assert code == 0
    assert out.splitlines() == ["[6]", "[3,3]", "[2,2,1,1]", "[2,1,1,1,1]"]
    code, out = run_cli(
        capsys, "fiber", "--n", "6", "--k", "2", "--mu", "[2]", "--format", "json"
    )
    payload = json.loads(out)
    assert set(payload) == {"n", "k", "mu", "members", "size", "d"}
    assert payload["size"] == 4 and payload["d"] == 0


def test_odd_list_command(capsys):
    code, out = run_cli(capsys, "odd-list", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "n": 4,
        "members": [[4], [3, 1], [2, 1, 1], [1, 1, 1, 1]],
        "size": 4,
    }


def test_image_command(capsys):
    code, out = run_cli(capsys, "image", "--n", "6", "--k", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"n", "k", "members", "size", "d"}
    assert payload["members"] == [] and payload["size"] == 0
    code, out = run_cli(capsys, "image", "--n", "19", "--k", "2")
    assert code == 0
    assert "[5,4,2,2,1,1]" in out.splitlines()


def test_surjective_command(capsys):
    code, out = run_cli(capsys, "surjective", "--n", "8", "--k", "0", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 8, "k": 0, "d": 3, "result": False}
    code, out = run_cli(capsys, "surjective", "--n", "12", "--k", "0")
    assert code == 0 and out.strip() == "true"


def test_commute_command(capsys):
    code, out = run_cli(
        capsys, "commute", "--n", "6", "--k", "0", "--l", "1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 6, "k": 0, "l": 1, "commutes": True, "witness": None}
    code, out = run_cli(
        capsys, "commute", "--n", "12", "--k", "1", "--l", "2", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["commutes"] is False and payload["witness"] is not None


def test_witness_command(capsys):
    code, out = run_cli(capsys, "witness", "--n", "13", "--k", "0", "--l", "2")
    assert code == 0 and out.strip() == "[5,5,1,1,1]"
    code, out = run_cli(
        capsys, "witness", "--n", "13", "--k", "0", "--l", "2", "--format", "json"
    )
    assert json.loads(out) == {"n": 13, "k": 0, "l": 2, "witness": [5, 5, 1, 1, 1]}


def test_tower_command(capsys):
    code, out = run_cli(capsys, "tower", "--lambda", "[5,4,2,2,1,1]", "--k", "2")
    assert code == 0
    assert out == "      [1]\n    [] [1]\n[1,1] [1] [] []\n"
    code, out = run_cli(
        capsys, "tower", "--lambda", "[5,4,2,2,1,1]", "--k", "2", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["result"] == [[[1]], [[], [1]], [[1, 1], [1], [], []]]


def test_verify_command(capsys):
    code, out = run_cli(capsys, "verify", "--max-n", "8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["mismatches"] == []
    assert payload["report"]["checks_run"] > 0


def test_verify_exit_code_on_mismatch(capsys, monkeypatch):
    fake = ParityReport(
        n_max=4,
        checks_run=1,
        mismatches=(Mismatch(lam=P((2, 1)), k=0, expected=P((2,)), got=P((1, 1))),),
    )
    monkeypatch.setattr("oddmaps.cli.cross_validate", lambda n, jobs=1: fake)
    code, out = run_cli(capsys, "verify", "--max-n", "4")
    assert code == 1
    assert "mismatches: 1" in out


def test_csv_output_parses(capsys):
    import csv
    import io

    code, out = run_cli(capsys, "fiber", "--n", "6", "--k", "2", "--mu", "[2]", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["partition"]
    assert rows[1:] == [["[6]"], ["[3,3]"], ["[2,2,1,1]"], ["[2,1,1,1,1]"]]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, out = run_cli(
        capsys, "fk", "--n", "15", "--k", "2", "--lambda", "[5,4,2,2,1,1]",
        "--format", "json", "--out", str(target),
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"] == [3, 2, 2, 2, 1, 1]


def test_usage_errors_exit_2(capsys):
    code, _ = run_cli(capsys, "fk", "--n", "15", "--k", "2", "--lambda", "[2,3]")
    assert code == 2
    code, _ = run_cli(capsys, "fk", "--n", "14", "--k", "2", "--lambda", "[5,4,2,2,1,1]")
    assert code == 2
    code, _ = run_cli(capsys, "fk", "--n", "3", "--k", "0", "--lambda", "[2,1]")
    assert code == 2
    code, _ = run_cli(capsys, "odd-list", "--n", "99")
    assert code == 2


def test_sweep_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ODDMAPS_MAX_N", "100")
    code, _ = run_cli(capsys, "odd-list", "--n", "41")
    assert code == 0
    monkeypatch.setenv("ODDMAPS_MAX_N", "10")
    code, _ = run_cli(capsys, "odd-list", "--n", "11")
    assert code == 2
