"""
algext.experiments.min_entropy_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Min-entropy floor and ceiling of corpus sources, by exact trimmed mass.
"""
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..group_fourier import entropy_upper_bound_check, min_entropy_floor_check
from ..variety_lab import build_source


class MinEntropyExperiment(BaseExperiment):
    """Each entry runs over the smallest listed field with q >= 20 d^5;
    entries with no such field are skipped.
    """
    KIND = "min-entropy"

    def run(self) -> List[Dict[str, Any]]:
        ctxs = sorted(self.fields(), key=lambda ctx: ctx.q)
        rows = []
        for entry in self.entries():
            large = [ctx for ctx in ctxs if ctx.q >= 20 * entry.d ** 5]
            if not large:
                continue
            ctx = large[0]
            dist = build_source(entry.source_spec(), ctx, self.budgets.enumeration,
                                self.config.shards)
            label = f"{entry.id} q={ctx.q}"
            floor = min_entropy_floor_check(dist, entry.k, entry.d, ctx.q)
            rows.append(self.row(f"{label} floor", floor["trimmed"], floor["allowed"],
                                 floor["pass"], entropy_floor=floor["entropy_floor"],
                                 min_entropy=floor["min_entropy"]))
            ceiling = entropy_upper_bound_check(dist, entry.k, entry.d, ctx.q,
                                                entry.variety.absolutely_irreducible)
            rows.append(self.row(f"{label} ceiling", ceiling["distance"], ceiling["required"],
                                 ceiling["pass"], entropy_ceiling=ceiling["entropy_ceiling"]))
        return rows
