"""
algext.experiments.extn1_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Ext(n, 1, d): the rank-1 DKL map followed by Ext(1, 1, d').
"""
from typing import Any, Dict, List

from ._extractor_rows import ExtractorExperiment
from ..pipeline import build_extN1


class Extn1Experiment(ExtractorExperiment):
    KIND = "extN1"

    def run(self) -> List[Dict[str, Any]]:
        relax = self.config.get_bool("relax")
        rows = []
        for entry in self.entries():
            if entry.k != 1:
                continue
            for ctx in self.fields():
                ext = build_extN1(ctx, entry.n, self.degree(entry), self.epsilon(), relax)
                row = self.measure(ext, entry, ctx)
                row["d_prime"] = ext.d_prime
                rows.append(row)
        return rows
