"""
algext.experiments.gabidulin_norms_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Exact L1 and L-infinity norms of the transforms of psi o f.
"""
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..constants import NORM_TOL
from ..lowbias_extract import BilinearExtractor, GabidulinParams, fourier_norm_check


class GabidulinNormsExperiment(BaseExperiment):
    KIND = "gabidulin-norms"

    def run(self) -> List[Dict[str, Any]]:
        p = self.config.get_int("p", 2)
        k_max = self.config.get_int("k", 2)
        rows = []
        for n in self.config.get_int_list("n", [4, 6, 8]):
            r = n // 2
            k = min(k_max, r)
            params = GabidulinParams(p, k, r, n - r, self.config.get_int("t", k * (n - r)))
            ext = BilinearExtractor(params)
            self.record(ext)
            check = fourier_norm_check(ext, self.budgets.dft)
            label = f"p={p} n={n} r={r} k={k} t={params.t}"
            rows.append(self.row(f"{label} L1", check["max_l1"], check["l1_bound"],
                                 all(c["l1"] <= check["l1_bound"] + NORM_TOL for c in check["rows"]),
                                 characters=len(check["rows"])))
            rows.append(self.row(f"{label} Linf", check["max_linf"], check["linf_bound"],
                                 all(c["linf"] <= check["linf_bound"] + NORM_TOL
                                     for c in check["rows"]),
                                 characters=len(check["rows"])))
        return rows
