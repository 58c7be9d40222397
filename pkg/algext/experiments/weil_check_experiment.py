"""
algext.experiments.weil_check_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
One-variable exponential sums of random polynomials.
"""
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..affine_ext import weil_sum_check


class WeilCheckExperiment(BaseExperiment):
    KIND = "weil-check"

    def run(self) -> List[Dict[str, Any]]:
        trials = self.config.get_int("trials", 100)
        rows = []
        for ctx in self.fields():
            for d in self.config.get_int_list("degrees", [self.config.get_int("d", 3)]):
                check = weil_sum_check(ctx.q, d, trials, self.seed(ctx.q * 16 + d))
                for line in check["rows"]:
                    rows.append(self.row(f"q={ctx.q} d={d} #{line['trial']}",
                                         line["abs_sum"], line["bound"], line["pass"],
                                         coeffs=line["coeffs"]))
        return rows
