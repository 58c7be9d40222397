"""
algext.experiments.gabidulin_rank_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Every nonzero combination of the rank-metric code matrices has rank at
least r - k + 1.
"""
import math
from itertools import product
from typing import Any, Dict, List, Tuple

from .base_experiment import BaseExperiment
from ..constants import COMBINATION_EXHAUSTIVE_LIMIT
from ..errors import ConfigError
from ..lowbias_extract import GabidulinParams, gabidulin_matrices, min_rank_survey

Grid = List[Tuple[int, int, int, int, int]]


class GabidulinRankExperiment(BaseExperiment):
    """Params:

        grid        p:k:r:s:t entries; generated when absent
        primes      primes of the generated grid (default 2, 3)
        max_s       largest s of the generated grid (default 6)
        max_bits    generated t keeps p^t <= 2^max_bits (default 20)
    """
    KIND = "gabidulin-rank"

    def grid(self) -> Grid:
        if self.config.has("grid"):
            grid = []
            for entry in self.config.get_list("grid"):
                try:
                    p, k, r, s, t = (int(v) for v in entry.split(":"))
                except ValueError as err:
                    raise ConfigError(f"grid entry '{entry}' is not p:k:r:s:t") from err
                grid.append((p, k, r, s, t))
            return grid
        max_s = self.config.get_int("max_s", 6)
        max_bits = self.config.get_int("max_bits", 20)
        grid = []
        for p in self.config.get_int_list("primes", [2, 3]):
            t_cap = math.floor(max_bits / math.log2(p))
            for k, r, s in product(range(1, max_s + 1), repeat=3):
                if k <= r <= s:
                    grid.append((p, k, r, s, min(k * s, t_cap)))
        return grid

    def run(self) -> List[Dict[str, Any]]:
        rows = []
        for p, k, r, s, t in self.grid():
            params = GabidulinParams(p, k, r, s, t)
            survey = min_rank_survey(gabidulin_matrices(params), p, params.rank_bound,
                                     self.optional_seed(),
                                     min(COMBINATION_EXHAUSTIVE_LIMIT, self.budgets.enumeration),
                                     self.budgets.samples)
            rows.append(self.row(f"p={p} k={k} r={r} s={s} t={t}", survey["min_rank"],
                                 survey["bound"], survey["pass"], survey["mode"],
                                 combinations=survey["combinations"]))
        return rows
