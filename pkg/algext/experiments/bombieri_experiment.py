"""
algext.experiments.bombieri_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Character sums of test polynomials over corpus curves.
"""
from typing import Any, Dict, List

from .base_experiment import BaseExperiment
from ..variety_lab import MultiPoly, character_sum_survey


def summand_polynomial(arity: int, degree: int) -> MultiPoly:
    """X1^degree + X2, or X1^degree on the line.
    """
    poly = MultiPoly.variable(arity, 0, degree)
    if arity > 1:
        poly = poly + MultiPoly.variable(arity, 1)
    return poly


class BombieriExperiment(BaseExperiment):
    """Params: entries, fields, degrees (of the test polynomials, default 1..3),
    max_curve_degree (default 3).
    """
    KIND = "bombieri"

    def run(self) -> List[Dict[str, Any]]:
        max_curve_degree = self.config.get_int("max_curve_degree", 3)
        rows = []
        for entry in self.entries():
            variety = entry.variety
            if variety.declared_dim != 1 or variety.degree_bound > max_curve_degree:
                continue
            for ctx in self.fields():
                for d2 in self.config.get_int_list("degrees", [1, 2, 3]):
                    poly = summand_polynomial(variety.arity, d2)
                    survey = character_sum_survey(variety, poly, ctx, self.budgets.enumeration,
                                                  self.budgets.dft)
                    rows.append(self.row(f"{entry.id} q={ctx.q} d2={d2}", survey["violators"],
                                         survey["allowed"], survey["pass"],
                                         max_abs_sum=survey["max_abs_sum"],
                                         sum_bound=survey["bound"], points=survey["points"]))
        return rows
