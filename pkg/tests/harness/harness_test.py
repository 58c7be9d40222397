"""
Tests for the experiment harness
"""

import json
import os

import pytest
import algext
from algext.experiments.mod_m_experiment import ModMExperiment


MOD_M_CONFIG = """
[experiment]
kind = mod-m
criterion = 4

[params]
N = 7, 100
M = 2, 3
"""

EMPTY_CONFIG = """
[experiment]
kind = mod-m

[params]
N = 2
M = 3
"""


def test_harness_arguments():
    """Checks that the harness keeps its output directory
    """
    harness = algext.Harness(output_dir="out")
    assert harness.output_dir == "out"


def test_run(harness, write_config):
    """Checks a mod-M run, its verdicts and the written files
    """
    report = harness.run(write_config("modm", MOD_M_CONFIG))
    assert report.passed
    assert report.kind == "mod-m"
    assert report.criterion == 4
    assert len(report.rows) == 4
    assert report.rows.all_pass()
    assert report.verdicts == {"rows": 4, "failed": 0, "failing": []}
    assert report.modes == ["exact"]
    assert report.constants["c_star"] == 4
    assert os.path.isfile(os.path.join(harness.output_dir, "modm.json"))
    with open(os.path.join(harness.output_dir, "modm.csv"), encoding="utf-8") as file:
        lines = file.read().splitlines()
    assert lines[0] == "label,mode,measured,bound,pass,details"
    assert len(lines) == 5


def test_run_is_deterministic(harness, write_config):
    """Checks that two runs differ in timing only
    """
    path = write_config("modm", MOD_M_CONFIG)
    first = harness.run(path, write=False)
    second = harness.run(path, write=False)
    assert first.deterministic_part() == second.deterministic_part()


def test_empty_report_fails(harness, write_config):
    """Checks that a report without rows is not a pass
    """
    report = harness.run(write_config("empty", EMPTY_CONFIG), write=False)
    assert len(report.rows) == 0
    assert not report.passed


def test_report_json(harness, write_config):
    """Checks the written report against the returned model
    """
    harness.run(write_config("modm", MOD_M_CONFIG))
    with open(os.path.join(harness.output_dir, "modm.json"), encoding="utf-8") as file:
        data = json.load(file)
    assert data["passed"]
    assert data["config"]["params"]["N"] == "7, 100"
    assert data["rows"][0]["label"] == "N=7 M=2"


def test_get_experiment(harness):
    """Checks lazy loading of experiment classes
    """
    klass = harness.get_experiment("mod-m")
    assert klass is ModMExperiment
    assert harness.get_experiment("mod-m") is klass


def test_suite_configs(harness):
    """Checks the shipped suites and an unknown one
    """
    smoke = harness.suite_configs("smoke")
    assert len(smoke) == 16
    assert os.path.basename(smoke[0]) == "c01_gabidulin_rank.ini"
    with pytest.raises(algext.errors.ConfigError) as excinfo:
        harness.suite_configs("nightly")
    assert excinfo.value.args[1] == 801


def test_suite_verdicts(tmp_path):
    """Checks that a broken experiment is a failing verdict of the suite
    """
    suite_dir = tmp_path / "configs" / "smoke"
    suite_dir.mkdir(parents=True)
    (suite_dir / "a_modm.ini").write_text(MOD_M_CONFIG, encoding="utf-8")
    (suite_dir / "b_broken.ini").write_text("[experiment]\nkind = teleport\n",
                                            encoding="utf-8")
    harness = algext.Harness(output_dir=str(tmp_path / "reports"),
                             configs_dir=str(tmp_path / "configs"))
    summary = harness.suite("smoke")
    assert not summary["passed"]
    assert summary["criteria"] == [4]
    first, second = summary["experiments"]
    assert first["passed"]
    assert not second["passed"]
    assert second["code"] == 801
    assert os.path.isfile(tmp_path / "reports" / "suite-smoke.json")


def test_corpus_list(harness):
    """Checks the corpus listing
    """
    listing = harness.corpus_list()
    assert len(listing) == 10
    parabola = next(entry for entry in listing if entry["id"] == "parabola")
    assert parabola["arity"] == 2
