"""
algext.experiments.composition_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
The composed extractor for (n, k, d) sources and its error budget.
"""
from typing import Any, Dict, List

from ._extractor_rows import ExtractorExperiment
from ..pipeline import CompositionExtractor, build_composition


class CompositionExperiment(ExtractorExperiment):
    KIND = "composition"

    def run(self) -> List[Dict[str, Any]]:
        relax = self.config.get_bool("relax")
        epsilon = self.epsilon()
        rows = []
        for entry in self.entries():
            for ctx in self.fields():
                ext = build_composition(ctx, entry.n, entry.k, self.degree(entry), epsilon,
                                        relax)
                rows.append(self.measure(ext, entry, ctx))
                if isinstance(ext, CompositionExtractor):
                    rows.append(self.row(f"{entry.id} q={ctx.q} error budget",
                                         ext.error_budget, epsilon,
                                         ext.error_budget <= epsilon, ell=ext.ell,
                                         eps1=ext.eps1, eps0=ext.eps0))
        return rows
