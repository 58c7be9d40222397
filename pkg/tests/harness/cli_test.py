"""
Tests for the command line interface
"""

import json

import pytest
from algext._version import __version__
from algext.artifacts import dump_artifact
from algext.cli import EXIT_FAIL, EXIT_PASS, main
from algext.lowbias_extract import ModMExtractor


PASSING = """
[experiment]
kind = mod-m

[params]
N = 7
M = 2
"""

NO_ROWS = """
[experiment]
kind = mod-m

[params]
N = 2
M = 3
"""


def test_version(capsys):
    """Checks that --version prints the package version
    """
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_run_pass(tmp_path, write_config, capsys):
    """Checks exit code 0 for a passing experiment
    """
    code = main(["--output-dir", str(tmp_path / "out"), "run",
                 write_config("good", PASSING)])
    assert code == EXIT_PASS
    assert "PASS" in capsys.readouterr().out
    assert (tmp_path / "out" / "good.json").is_file()


def test_run_fail(tmp_path, write_config):
    """Checks exit code 1 for a report without passing rows
    """
    code = main(["--output-dir", str(tmp_path / "out"), "run",
                 write_config("empty", NO_ROWS)])
    assert code == EXIT_FAIL


def test_bad_config(tmp_path, write_config, capsys):
    """Checks exit code 1 and the error code for a rejected config
    """
    code = main(["--output-dir", str(tmp_path / "out"), "run",
                 write_config("bad", "[experiment]\nkind = teleport\n")])
    assert code == EXIT_FAIL
    assert "error 801" in capsys.readouterr().err


def test_replay(tmp_path, capsys):
    """Checks that replay prints one output per input line
    """
    artifact = str(tmp_path / "modm.json")
    dump_artifact(ModMExtractor(10, 1, 4), artifact)
    inputs = tmp_path / "inputs.txt"
    inputs.write_text("5\n9\n", encoding="utf-8")
    assert main(["replay", artifact, str(inputs)]) == EXIT_PASS
    assert capsys.readouterr().out.splitlines() == ["1", "1"]


def test_replay_to_file(tmp_path):
    """Checks the -o option of replay
    """
    artifact = str(tmp_path / "modm.json")
    dump_artifact(ModMExtractor(10, 1, 4), artifact)
    inputs = tmp_path / "inputs.txt"
    inputs.write_text("6\n", encoding="utf-8")
    output = tmp_path / "outputs.txt"
    assert main(["replay", artifact, str(inputs), "-o", str(output)]) == EXIT_PASS
    assert output.read_text(encoding="utf-8") == "2\n"


def test_replay_bad_artifact(tmp_path, capsys):
    """Checks exit code 1 for a truncated artifact
    """
    artifact = tmp_path / "broken.json"
    artifact.write_text("{\"format\": ", encoding="utf-8")
    inputs = tmp_path / "inputs.txt"
    inputs.write_text("1\n", encoding="utf-8")
    assert main(["replay", str(artifact), str(inputs)]) == EXIT_FAIL
    assert "error 802" in capsys.readouterr().err


def test_corpus_list(capsys):
    """Checks one JSON line per corpus entry
    """
    assert main(["corpus", "list"]) == EXIT_PASS
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 10
    assert {json.loads(line)["id"] for line in lines} >= {"parabola", "circle"}
