"""
algext.experiments.seeded_extractor_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
The multiply-add hash on random flat sources, against its declared error.
"""
from typing import Any, Dict, List

import numpy as np

from .base_experiment import BaseExperiment
from ..pipeline import build_seeded_extractor, leftover_hash_distance


class SeededExtractorExperiment(BaseExperiment):
    """Params: n_b, delta, epsilon, trials. Each trial draws a flat source of
    2^(n_b - delta) distinct inputs.
    """
    KIND = "seeded-extractor"

    def run(self) -> List[Dict[str, Any]]:
        n_b = self.config.get_int("n_b")
        delta = self.config.get_int("delta")
        cfg = build_seeded_extractor(n_b, delta, self.epsilon())
        self.record(cfg)
        rng = np.random.default_rng(self.seed())
        support_size = 1 << max(n_b - delta, 0)
        rows = []
        for trial in range(self.config.get_int("trials", 10)):
            support = rng.choice(1 << n_b, size=support_size, replace=False)
            check = leftover_hash_distance(cfg, [int(x) for x in support],
                                           self.budgets.enumeration)
            rows.append(self.row(f"trial {trial}", check["distance"], check["bound"],
                                 check["pass"], m_out=check["m_out"]))
        return rows
