"""Command-line surface: arguments, output, exit codes."""

import pytest

from antroute.cli import main
from antroute.harness import CSV_HEADER

LINE_MAP_TEXT = """
PARAMS toll
NODE 1 0 0
NODE 2 1 0
NODE 3 2 0
EDGE 1 2 1 1
EDGE 2 3 1 2
"""


@pytest.fixture
def line_map(tmp_path):
    path = tmp_path / "line.map"
    path.write_text(LINE_MAP_TEXT, encoding="utf-8")
    return path


def _argv(line_map, *extra):
    return [
        "--map", str(line_map),
        "--origin", "1",
        "--dest", "3",
        "--weights", "toll=1",
        "--algo", "astar",
        *extra,
    ]


def test_cli_success_prints_best(line_map, capsys):
    assert main(_argv(line_map)) == 0
    out = capsys.readouterr().out
    assert "best: 1 -> 2 -> 3 (cost 3)" in out
    assert "velocity 40 km/h" in out


def test_cli_writes_csv(line_map, tmp_path, capsys):
    out_path = tmp_path / "report.csv"
    argv = _argv(line_map) + ["--out", str(out_path)]
    assert main(argv) == 0
    assert out_path.read_text(encoding="utf-8").startswith(CSV_HEADER)


def test_cli_colony_overrides(line_map, capsys):
    argv = [
        "--map", str(line_map),
        "--origin", "1",
        "--dest", "3",
        "--weights", "toll=1",
        "--algo", "hybrid",
        "--loops", "3",
        "--ants", "2",
        "--repeats", "2",
        "--seed", "11",
        "--out", "/dev/null",
    ]
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert "mean final best cost over 2 runs" in out


def test_cli_usage_errors_exit_1(line_map, capsys):
    with pytest.raises(SystemExit) as err:
        main(_argv(line_map, "--algo", "bogus"))
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["--origin", "1"])  # missing required options
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(_argv(line_map, "--weights", "toll"))  # malformed k=v
    assert err.value.code == 1


def test_cli_validation_errors_exit_2(line_map, tmp_path, capsys):
    bad_map = tmp_path / "bad.map"
    bad_map.write_text("PARAMS toll\nNODE 1 0 0\nEDGE 1 9 0 1\n", encoding="utf-8")
    argv = _argv(line_map)
    argv[1] = str(bad_map)
    assert main(argv) == 2
    assert "unknown node" in capsys.readouterr().err

    # weight keys must cover the map's PARAMS exactly
    assert main(_argv(line_map, "--weights", "toll=1,extra=2")) == 2
    assert main(_argv(line_map, "--weights", "other=1")) == 2

    # unknown intersection ids
    assert main(_argv(line_map, "--origin", "42")) == 2

    # missing map file
    argv = _argv(line_map)
    argv[1] = str(tmp_path / "nope.map")
    assert main(argv) == 2


def test_cli_unreachable_exits_3(line_map, capsys):
    argv = _argv(line_map, "--origin", "3", "--dest", "1")
    assert main(argv) == 3
    assert "no direction" in capsys.readouterr().err


def test_cli_metadata_flags(line_map, capsys):
    argv = _argv(line_map, "--velocity", "50", "--start-time", "07:30")
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert "velocity 50 km/h" in out
    assert "07:30" in out
