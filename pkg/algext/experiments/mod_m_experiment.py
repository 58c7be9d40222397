"""
algext.experiments.mod_m_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
U_N mod M against U_M, exactly.
"""
from fractions import Fraction
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..group_fourier import Carrier, FiniteDistribution, distance_to_uniform, pushforward
from ..lowbias_extract import ModMExtractor, mod_m_uniform_distance
from ..utils import number_token


class ModMExperiment(BaseExperiment):
    KIND = "mod-m"

    def run(self) -> List[Dict[str, Any]]:
        rows = []
        for N in self.config.get_int_list("N"):
            for M in self.config.get_int_list("M"):
                if M > N:
                    continue
                ext = ModMExtractor(N, 1, M)
                source = FiniteDistribution.uniform(Carrier.residue_power(N, 1))
                image = pushforward(source, ext.extract, Carrier.residue_power(M, 1))
                distance = distance_to_uniform(image)
                bound = Fraction(M, N)
                closed_form = distance == mod_m_uniform_distance(N, M)
                rows.append(self.row(f"N={N} M={M}", distance, bound,
                                     distance <= bound and closed_form,
                                     exact=number_token(distance), closed_form=closed_form))
        return rows
