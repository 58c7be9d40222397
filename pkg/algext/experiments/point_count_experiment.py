"""
algext.experiments.point_count_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
|V(F_q)| against the elementary upper bound and the Lang-Weil floor.
"""
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..variety_lab import point_count_bounds


class PointCountExperiment(BaseExperiment):
    KIND = "point-count"

    def run(self) -> List[Dict[str, Any]]:
        rows = []
        for entry in self.entries():
            for ctx in self.fields():
                check = point_count_bounds(entry.variety, ctx, self.budgets.enumeration)
                label = f"{entry.id} q={ctx.q}"
                rows.append(self.row(f"{label} upper", check["count"], check["upper"],
                                     check["count"] <= check["upper"]))
                if check["lower"] is not None:
                    rows.append(self.row(f"{label} lower", check["count"], check["lower"],
                                         check["count"] >= check["lower"]))
        return rows
