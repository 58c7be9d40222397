"""
algext.experiments.xor_lemma_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Distance to uniform against max bias * sqrt(|A|) on random distributions.
"""
from typing import Any, Dict, List

import numpy as np

from .base_experiment import BaseExperiment
from ..finite_field import make_field
from ..group_fourier import Carrier, FiniteDistribution, xor_distance_check

CARRIERS = [
    ("field", 2, 1, 10),
    ("field", 2, 4, 2),
    ("field", 3, 2, 3),
    ("field", 5, 1, 4),
    ("field", 7, 1, 3),
    ("field", 2, 3, 3),
    ("residue", 10, 0, 3),
    ("residue", 1024, 0, 1),
    ("residue", 6, 0, 3),
    ("residue", 31, 0, 2),
]


def _carrier(spec: tuple) -> Carrier:
    kind, a, b, arity = spec
    if kind == "field":
        return Carrier.field_power(make_field(a, b), arity)
    return Carrier.residue_power(a, arity)


class XorLemmaExperiment(BaseExperiment):
    """Params: distributions (default 200), max_size (default 2^10).
    Each distribution picks a carrier, a support size and random weights.
    """
    KIND = "xor-lemma"

    def run(self) -> List[Dict[str, Any]]:
        max_size = self.config.get_int("max_size", 1 << 10)
        carriers = [c for c in (_carrier(spec) for spec in CARRIERS)
                    if c.cardinality <= max_size]
        rng = np.random.default_rng(self.seed())
        rows = []
        for index in range(self.config.get_int("distributions", 200)):
            carrier = carriers[int(rng.integers(len(carriers)))]
            elements = list(carrier.elements())
            support = int(rng.integers(1, len(elements) + 1))
            picks = rng.choice(len(elements), size=support, replace=False)
            weights = rng.integers(1, 100, size=support)
            dist = FiniteDistribution(carrier, {elements[int(i)]: int(w)
                                                for i, w in zip(picks, weights)})
            check = xor_distance_check(dist, self.budgets.dft)
            rows.append(self.row(f"#{index} {carrier.token()}", check["measured_distance"],
                                 check["bound"], check["holds"], support=support,
                                 max_bias=check["max_bias"]))
        return rows
