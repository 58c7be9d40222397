"""
algext.experiments.lowbias_extract_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
The dense affine extractor on affine subspaces of small codimension,
measured exactly against p^-(r-k+1) e p^(t/2) with e = p^codim.
"""
from collections import Counter
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..affine_ext import AffineSubspace, sample_subspace
from ..constants import DISTANCE_TOL
from ..group_fourier import Carrier, FiniteDistribution, distance_to_uniform
from ..lowbias_extract import BilinearExtractor, build_dense_affine_extractor


class LowbiasExtractExperiment(BaseExperiment):
    """Params: n, p, epsilon, max_codim, subspaces (per codimension).
    The extractor is built for e = p^max_codim.
    """
    KIND = "lowbias-extract"

    def _measure(self, ext: BilinearExtractor, sub: AffineSubspace) -> float:
        outputs = ext.extract_array(sub.points())
        carrier = Carrier.residue_power(ext.p, ext.t)
        counts = Counter(tuple(int(v) for v in row) for row in outputs)
        return distance_to_uniform(FiniteDistribution(carrier, dict(counts)))

    def run(self) -> List[Dict[str, Any]]:
        n = self.config.get_int("n", 12)
        p = self.config.get_int("p", 2)
        max_codim = self.config.get_int("max_codim", 2)
        per_codim = self.config.get_int("subspaces", 8)
        ext = build_dense_affine_extractor(n, p, p ** max_codim, float(self.epsilon()))
        self.record(ext)
        k = ext.params.k
        rows = []
        for codim in range(max_codim + 1):
            bound = float(p) ** -(ext.r - k + 1) * p ** codim * p ** (ext.t / 2)
            count = 1 if codim == 0 else per_codim
            for index in range(count):
                sub = sample_subspace(n, n - codim, p, self.seed(1000 * codim + index))
                distance = self._measure(ext, sub)
                rows.append(self.row(f"codim={codim} #{index}", distance, bound,
                                     distance <= bound + DISTANCE_TOL, pivots=list(sub.pivots),
                                     t=ext.t))
        return rows
