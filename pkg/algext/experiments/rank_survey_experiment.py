"""
algext.experiments.rank_survey_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Failure fraction of the seeded rank family on every low-dimensional
subspace, or on corpus varieties (heuristic).
"""
from fractions import Fraction
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..errors import ConfigError
from ..finite_field import FieldCtx
from ..rank_extract import (build_seeded_family, enumerate_subspaces, subspace_rank_survey,
                            variety_rank_survey)
from ..variety_lab import HEURISTIC


class RankSurveyExperiment(BaseExperiment):
    """Params:

        mode        subspace (default) or variety
        n           ambient dimension (subspace mode, default 3)
        m           output dimensions (default 1, 2)
        dims        subspace dimensions (default 1, 2)
        ell         family size (default q - 1)
        entries     corpus entries (variety mode)
        max_ext     extensions used by the dimension estimate (default 3)
    """
    KIND = "rank-survey"

    def _subspace_rows(self, ctx: FieldCtx) -> List[Dict[str, Any]]:
        n = self.config.get_int("n", 3)
        ell = self.config.get_int("ell", ctx.q - 1)
        rows = []
        for m in self.config.get_int_list("m", [1, 2]):
            family = build_seeded_family(n, m, ctx, ell)
            self.record(family)
            for k in self.config.get_int_list("dims", [1, 2]):
                if k < m:
                    continue
                worst, count, failed = Fraction(0), 0, 0
                for basis in enumerate_subspaces(n, k, ctx):
                    survey = subspace_rank_survey(family, basis)
                    worst = max(worst, survey["fail_fraction"])
                    count += 1
                    failed += not survey["pass"]
                bound = Fraction(m * (n - m), family.size)
                rows.append(self.row(f"q={ctx.q} n={n} m={m} dim={k}", worst, bound,
                                     failed == 0, subspaces=count, failing_subspaces=failed,
                                     ell=family.size))
        return rows

    def _variety_rows(self, ctx: FieldCtx) -> List[Dict[str, Any]]:
        max_ext = self.config.get_int("max_ext", 3)
        rows = []
        for entry in self.entries():
            variety = entry.variety
            n = variety.arity
            m = self.config.get_int("m", min(n, variety.declared_dim or 1))
            ell = self.config.get_int("ell", ctx.q - 1)
            family = build_seeded_family(n, m, ctx, ell)
            survey = variety_rank_survey(family, variety, ctx, max_ext,
                                         self.budgets.enumeration)
            rows.append(self.row(f"{entry.id} q={ctx.q} m={m}", survey["fail_fraction"],
                                 survey["bound"], survey["pass"], HEURISTIC,
                                 dims=survey["dims"]))
        return rows

    def run(self) -> List[Dict[str, Any]]:
        mode = self.config.get_str("mode", "subspace")
        if mode not in ("subspace", "variety"):
            raise ConfigError(f"rank-survey mode must be subspace or variety, got {mode}")
        rows = []
        for ctx in self.fields():
            rows.extend(self._subspace_rows(ctx) if mode == "subspace"
                        else self._variety_rows(ctx))
        return rows
