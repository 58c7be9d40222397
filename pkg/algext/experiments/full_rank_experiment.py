"""
algext.experiments.full_rank_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Ext(k, k, d) on full-rank sources, with its output accounting.
"""
from typing import Any, Dict, List

from ._extractor_rows import ExtractorExperiment
from ..pipeline import FullRankExtractor, build_full_rank_ext


class FullRankExperiment(ExtractorExperiment):
    KIND = "full-rank"

    def run(self) -> List[Dict[str, Any]]:
        relax = self.config.get_bool("relax")
        rows = []
        for entry in self.entries():
            if entry.k != entry.n:
                continue
            for ctx in self.fields():
                ext = build_full_rank_ext(ctx, entry.k, self.degree(entry), self.epsilon(),
                                          relax)
                rows.append(self.measure(ext, entry, ctx))
                if isinstance(ext, FullRankExtractor):
                    expected = ext.ext1.m_out + ext.ext2.m_out - ext.ell_used
                    rows.append(self.row(f"{entry.id} q={ctx.q} output bits", ext.m_out,
                                         expected, ext.m_out == expected, ell=ext.ell,
                                         ell_used=ext.ell_used))
        return rows
