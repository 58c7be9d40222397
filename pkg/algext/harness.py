"""
algext.harness
~~~~~~~~~~~~~~
This module contains the experiment harness: the facade that runs
experiment files, replays artifacts and executes the shipped suites.
"""
import importlib
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Union

from .artifacts import combined_hash, replay as replay_artifact
from .config import ExperimentConfig, load_config
from .constants import REPORT_VERSION, pinned_constants
from .corpus import list_entries, load_entry
from .errors import AlgextError, ConfigError
from .models.experiment_report import ExperimentReportModel
from .utils import kind_to_module, snake_to_camel

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
CONFIGS_DIR = os.path.join(DATA_DIR, "configs")
SUITES = ("smoke", "full")


class Harness:
    """Harness used to run experiments.

    Usage:

        import algext
        harness = algext.Harness(output_dir="reports")
        report = harness.run("weil.ini")
        report.passed
    """

    def __init__(self, output_dir: str = "reports", configs_dir: str = CONFIGS_DIR) -> None:
        """Instantiate a new harness.

        :param str output_dir: (optional) Directory for reports whose config
        does not name an output path. Defaults to "reports".
        :param str configs_dir: (optional) Directory holding one sub-directory
        of experiment files per suite.
        """
        self.output_dir = output_dir
        self.configs_dir = configs_dir

    # === Experiments
    def run(self, config: Union[str, ExperimentConfig],
            write: bool = True) -> ExperimentReportModel:
        """Runs one experiment.

        :param config: Path to an experiment file or a parsed config
        :param bool write: (optional) Write the JSON report and the CSV rows
        :raises ConfigError: the config does not parse
        :raises BudgetExceeded: a step exceeds its budget
        :return: Experiment report model
        """
        if isinstance(config, str):
            config = load_config(config)
        experiment_klass = self.get_experiment(config.kind)
        experiment = experiment_klass(config)
        logger.info("running %s (%s)", config.name, config.kind)
        started = time.perf_counter()
        rows = experiment.run()
        elapsed = time.perf_counter() - started

        failing = [row["label"] for row in rows if not row["pass"]]
        passed = bool(rows) and not failing
        report = ExperimentReportModel({
            "version": REPORT_VERSION,
            "name": config.name,
            "kind": config.kind,
            "criterion": config.criterion,
            "config": config.to_json(),
            "constants": pinned_constants(),
            "artifact_hash": combined_hash(experiment.artifacts),
            "artifacts": sorted(experiment.artifacts),
            "rows": rows,
            "verdicts": {"rows": len(rows), "failed": len(failing), "failing": failing},
            "passed": passed,
            "modes": sorted({row["mode"] for row in rows}),
            "wall_clock": round(elapsed, 3),
            "shards": config.shards,
        })
        logger.info("%s: %d rows, %s", config.name, len(rows), "pass" if passed else "FAIL")
        if write:
            self.write_report(report, config)
        return report

    def write_report(self, report: ExperimentReportModel, config: ExperimentConfig) -> None:
        report_path = config.report or os.path.join(self.output_dir, f"{config.name}.json")
        csv_path = config.csv or os.path.splitext(report_path)[0] + ".csv"
        for path in (report_path, csv_path):
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
        report.write(report_path)
        report.rows.to_csv(csv_path)
        logger.debug("report written to %s and %s", report_path, csv_path)

    # === Artifacts
    def replay(self, artifact_path: str, input_path: str,
               output_path: Optional[str] = None) -> List[str]:
        """Replays a stored extractor on an input file.

        :param str artifact_path: Artifact written by :func:`algext.artifacts.dump_artifact`
        :param str input_path: One input per line
        :param str output_path: (optional) File to write the outputs to
        :raises ArtifactVersionMismatch: the artifact is truncated or foreign
        :return: One output per input line
        """
        outputs = replay_artifact(artifact_path, input_path)
        if output_path:
            with open(output_path, "w", encoding="utf-8", newline="\n") as file:
                file.writelines(f"{line}\n" for line in outputs)
        return outputs

    # === Suites
    def suite_configs(self, name: str) -> List[str]:
        """Experiment files of a shipped suite, sorted.

        :raises ConfigError: unknown suite
        """
        if name not in SUITES:
            raise ConfigError(f"unknown suite '{name}', expected one of {', '.join(SUITES)}")
        directory = os.path.join(self.configs_dir, name)
        try:
            names = sorted(f for f in os.listdir(directory) if f.endswith(".ini"))
        except OSError as err:
            raise ConfigError(f"cannot read suite {directory}: {err}") from err
        return [os.path.join(directory, f) for f in names]

    def suite(self, name: str, jobs: int = 1) -> Dict[str, Any]:
        """Runs every experiment of a suite. Failures, errors included, are
        verdicts naming the experiment.

        :param str name: "smoke" or "full"
        :param int jobs: (optional) Experiments run concurrently
        :return: Aggregated suite report
        """
        paths = self.suite_configs(name)
        started = time.perf_counter()
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_suite_entry, paths,
                                        [self.output_dir] * len(paths)))
        else:
            results = [_suite_entry(path, self.output_dir) for path in paths]
        summary = {
            "version": REPORT_VERSION,
            "suite": name,
            "experiments": results,
            "criteria": sorted(r["criterion"] for r in results if r["criterion"] is not None),
            "passed": bool(results) and all(r["passed"] for r in results),
            "wall_clock": round(time.perf_counter() - started, 3),
        }
        os.makedirs(self.output_dir, exist_ok=True)
        with open(os.path.join(self.output_dir, f"suite-{name}.json"), "w",
                  encoding="utf-8") as file:
            json.dump(summary, file, sort_keys=True, indent=2)
            file.write("\n")
        return summary

    # === Corpus
    def corpus_list(self) -> List[Dict[str, Any]]:
        """Shipped corpus entries with their (n, k, d) budgets.
        """
        listing = []
        for entry_id in list_entries():
            entry = load_entry(entry_id)
            listing.append({"id": entry.id, "n": entry.n, "k": entry.k, "d": entry.d,
                            "arity": entry.variety.arity,
                            "dim": entry.variety.declared_dim,
                            "description": entry.description})
        return listing

    # === Lazy loading
    def get_experiment(self, kind: str) -> Any:
        """Lazily loads the experiment class of a given kind and stores it
        under a specific instance attribute. For example, if the `kind`
        is "weil-check", then it will load .experiments.weil_check_experiment
        module and then set attribute like this:
            self.__weil_check_experiment = WeilCheckExperiment

        :param str kind: Experiment kind to load
        :raises ConfigError: no module implements the kind
        """
        module_name = kind_to_module(kind)
        camelized_name = snake_to_camel(module_name)
        try:
            module = importlib.import_module(
                f".experiments.{module_name}", package='algext')
        except ModuleNotFoundError as err:
            raise ConfigError(f"no experiment implements kind '{kind}'") from err
        experiment_klass = getattr(module, camelized_name)
        return self.__fetch_attr(f"__{module_name}", lambda: experiment_klass)

    def __fetch_attr(self, attr_name: str, populator: Callable) -> Any:
        """Searches for the given attribute. Uses populator
        to set the attribute if it cannot be found. Used to lazy-load
        experiments.
        """
        if not hasattr(self, attr_name):
            setattr(self, attr_name, populator())

        return getattr(self, attr_name)


def _suite_entry(path: str, output_dir: str) -> Dict[str, Any]:
    name = os.path.splitext(os.path.basename(path))[0]
    try:
        config = load_config(path)
    except ConfigError as err:
        logger.error("suite experiment %s: %s", name, err.message)
        return {"name": name, "criterion": None, "kind": None, "passed": False,
                "error": err.message, "code": err.code}
    entry: Dict[str, Any] = {"name": name, "criterion": config.criterion, "kind": config.kind}
    try:
        report = Harness(output_dir).run(config)
    except AlgextError as err:
        logger.error("suite experiment %s failed: %s", name, err.message)
        entry.update({"passed": False, "error": f"{type(err).__name__}: {err.message}",
                      "code": err.code})
        return entry
    except Exception as err:  # pylint: disable=broad-except
        logger.exception("suite experiment %s crashed", name)
        entry.update({"passed": False, "error": f"{type(err).__name__}: {err}", "code": None})
        return entry
    entry.update({"passed": report.passed, "rows": len(report.rows),
                  "failed": report.verdicts["failed"], "modes": report.modes,
                  "wall_clock": report.wall_clock})
    return entry
