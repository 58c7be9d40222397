"""
algext.models.experiment_report
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Module containing experiment report model.
"""
import json
from typing import Any, Dict

from .base_model import BaseModel
from ..collections.result_rows import ResultRowsCollection


class ExperimentReportModel(BaseModel):
    """Describes an experiment report.

    Verdicts are computed from the rows the report holds and nothing else.
    """
    ATTRS = [
        "version",
        "name",
        "kind",
        "criterion",
        "config",
        "constants",
        "artifact_hash",
        "verdicts",
        "passed",
        "modes",
        "wall_clock",
        "shards",
    ]

    def __init__(self, raw_data: Dict[str, Any]) -> None:
        super().__init__(raw_data)
        self.rows = ResultRowsCollection(raw_data)

    def deterministic_part(self) -> Dict[str, Any]:
        """The report without timing, for run-to-run comparison.
        """
        return {k: v for k, v in self.raw_data.items() if k != "wall_clock"}

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as file:
            json.dump(self.raw_data, file, sort_keys=True, indent=2)
            file.write("\n")
