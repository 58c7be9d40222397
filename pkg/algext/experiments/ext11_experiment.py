"""
algext.experiments.ext11_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Ext(1, 1, d) end to end on curve sources in A^1.
"""
from typing import Any, Dict, List

from ._extractor_rows import ExtractorExperiment
from ..pipeline import build_ext11


class Ext11Experiment(ExtractorExperiment):
    KIND = "ext11"

    def run(self) -> List[Dict[str, Any]]:
        relax = self.config.get_bool("relax")
        min_bits = self.config.get_int("min_bits", 0)
        rows = []
        for entry in self.entries():
            for ctx in self.fields():
                ext = build_ext11(ctx, self.degree(entry), self.epsilon(), relax, min_bits)
                row = self.measure(ext, entry, ctx)
                row["branch"] = ext.branch
                rows.append(row)
        return rows
