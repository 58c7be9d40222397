"""
algext.experiments.fiber_check_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Fibers of the DKL map on corpus curves and surfaces against the Bezout cap.
"""
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..rank_extract import build_regular_matrix, choose_degrees, dkl_map, fiber_finiteness_check


class FiberCheckExperiment(BaseExperiment):
    """The map sends A^r to A^dim V with degrees above the entry's d.
    Entries of dimension 0 or above ``max_dim`` are skipped.
    """
    KIND = "fiber-check"

    def run(self) -> List[Dict[str, Any]]:
        max_dim = self.config.get_int("max_dim", 2)
        tag = self.config.get_str("matrix", "vandermonde")
        rows = []
        for entry in self.entries():
            dim = entry.variety.declared_dim or 0
            if not 1 <= dim <= max_dim:
                continue
            degrees = choose_degrees(entry.variety.arity, entry.d)
            for ctx in self.fields():
                matrix = build_regular_matrix(dim, entry.variety.arity, dim, ctx, tag)
                ext = dkl_map(degrees, matrix)
                self.record(ext)
                check = fiber_finiteness_check(ext, entry.variety, ctx,
                                               budget=self.budgets.enumeration)
                rows.append(self.row(f"{entry.id} q={ctx.q}", check["max_fiber_size"],
                                     check["bezout_cap"], check["pass"], check["mode"],
                                     fibers=check["fibers"], degrees=list(degrees.degrees)))
        return rows
