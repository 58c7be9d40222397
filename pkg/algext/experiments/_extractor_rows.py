"""
algext.experiments._extractor_rows
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Shared measurement of deterministic extractors on corpus sources.
"""
from typing import Any, Dict

from .base_experiment import BaseExperiment
from ..corpus import CorpusEntry
from ..errors import ConfigError
from ..finite_field import FieldCtx
from ..pipeline import measure_extractor
from ..variety_lab import build_source


class ExtractorExperiment(BaseExperiment):
    """Params shared by the extractor kinds:

        entries     corpus entries
        fields      fields (or [experiment] field)
        epsilon     target error
        d           degree budget (default: the entry's d)
        relax       desk-scale rules instead of the asymptotic floors
        measure     exact (default) or monte_carlo
    """

    def measure(self, ext: Any, entry: CorpusEntry, ctx: FieldCtx) -> Dict[str, Any]:
        method = self.config.get_str("measure", "exact")
        if method not in ("exact", "monte_carlo"):
            raise ConfigError(f"measure must be exact or monte_carlo, got {method}")
        source = build_source(entry.source_spec(), ctx, self.budgets.enumeration,
                              self.config.shards)
        seed = self.seed() if method == "monte_carlo" else 0
        result = measure_extractor(ext, source, method, self.budgets.samples, seed,
                                   self.budgets.enumeration)
        digest = self.record(ext)
        return self.row(f"{entry.id} q={ctx.q}", result["distance"], result["declared_eps"],
                        result["pass"], result["mode"], floor=result["floor"],
                        m_out=result["m_out"], min_entropy=result["min_entropy"],
                        violations=list(ext.violations), artifact=digest)

    def degree(self, entry: CorpusEntry) -> int:
        return self.config.get_int("d", entry.d)
