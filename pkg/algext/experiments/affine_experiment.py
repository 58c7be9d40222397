"""
algext.experiments.affine_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
The affine extractor on sampled affine subspaces.
"""
from typing import Any, Dict, List, Union

from .base_experiment import BaseExperiment
from ..affine_ext import (build_affine_ext, good_degrees, measure_affine_bias,
                          sample_subspace, uniform_input_check)


class AffineExperiment(BaseExperiment):
    """Params: n, k (subspace dimension), m, epsilon (for the degree
    product), relax, characters ("all" or a count), subspaces.

    Characters with fewer than k/2 nonzero pivot coefficients are reported
    but fall outside the bound.
    """
    KIND = "affine"

    def run(self) -> List[Dict[str, Any]]:
        q = self.config.ctx.q
        n = self.config.get_int("n", 4)
        k = self.config.get_int("k", 2)
        m = self.config.get_int("m", 1)
        degrees = good_degrees(n, q, float(self.epsilon()), self.config.get_bool("relax"))
        ext = build_affine_ext(n, m, q, degrees)
        raw = self.config.get_str("characters", "all")
        chars: Union[str, int] = raw if raw == "all" else int(raw)
        rows = []
        for index in range(self.config.get_int("subspaces", 1)):
            sub = sample_subspace(n, k, q, self.seed(index))
            result = measure_affine_bias(ext, sub, chars, self.seed(10_000 + index),
                                         self.budgets.enumeration)
            for line in result["rows"]:
                rows.append(self.row(f"subspace {index} c#{line['c_index']}",
                                     line["abs_bias"], line["proof_bound"], line["pass"],
                                     result["mode"], c=line["c"],
                                     nonzero_pivots=line["nonzero_pivots"],
                                     applicable=line["applicable"], D=result["D"]))
        uniform = uniform_input_check(ext, self.budgets.enumeration)
        rows.append(self.row("uniform input", uniform["distance"], 0, uniform["pass"],
                             uniform["mode"], analytic=uniform["analytic"],
                             degrees=list(degrees.degrees)))
        return rows
