"""
algext.collections.result_rows
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Module containing result rows collection.
"""
import csv
import json
from typing import List

from .base_collection import BaseCollection
from ..models.result_row import ResultRowModel


class ResultRowsCollection(BaseCollection):
    """Describes the rows of an experiment report.
    """
    DATA_KEY = "rows"
    MODEL_KLASS = ResultRowModel

    def all_pass(self) -> bool:
        return all(row.passed for row in self.items)

    def failing(self) -> List[ResultRowModel]:
        return [row for row in self.items if not row.passed]

    def modes(self) -> List[str]:
        return sorted({str(row.mode) for row in self.items})

    def to_csv(self, path: str) -> None:
        """Writes one line per row: the common columns, the verdict and the
        remaining fields as a JSON object.
        """
        with open(path, "w", encoding="utf-8", newline="") as file:
            writer = csv.writer(file)
            writer.writerow(ResultRowModel.ATTRS + ["pass", "details"])
            for row in self.items:
                writer.writerow([getattr(row, attr) for attr in ResultRowModel.ATTRS]
                                + [row.passed, json.dumps(row.details, sort_keys=True)])
