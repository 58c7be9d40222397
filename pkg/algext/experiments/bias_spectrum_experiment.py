"""
algext.experiments.bias_spectrum_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Exact character biases of the uniform source or a corpus source.
"""
from typing import Any, Dict, List

import numpy as np

from .base_experiment import BaseExperiment
from ..constants import BIAS_TOL, NORM_TOL
from ..corpus import load_entry
from ..group_fourier import (Carrier, FiniteDistribution, bias_spectrum, classify_bias,
                             parseval_gap)
from ..variety_lab import build_source


class BiasSpectrumExperiment(BaseExperiment):
    """Params:

        source      "uniform" (default) or a corpus entry id
        n           arity of the uniform source (default 1)
        epsilon     bias threshold (default 1e-9)
        e           characters allowed above the threshold (default 0)
        spectrum    optional CSV path for the full spectrum
    """
    KIND = "bias-spectrum"

    def run(self) -> List[Dict[str, Any]]:
        ctx = self.config.ctx
        source = self.config.get_str("source", "uniform")
        if source == "uniform":
            dist = FiniteDistribution.uniform(
                Carrier.field_power(ctx, self.config.get_int("n", 1)))
        else:
            entry = load_entry(source)
            dist = build_source(entry.source_spec(), ctx, self.budgets.enumeration,
                                self.config.shards)
        spectrum = bias_spectrum(dist, self.budgets.dft)
        if self.config.has("spectrum"):
            spectrum.to_csv(self.config.get_str("spectrum"))
        epsilon = float(self.config.get_number("epsilon", BIAS_TOL))
        allowed = self.config.get_int("e", 0)
        label = f"{source} q={ctx.q}"

        biases = np.sort(spectrum.nontrivial_abs())[::-1]
        beyond = float(biases[allowed]) if allowed < biases.size else 0.0
        classes = classify_bias(spectrum, epsilon)
        gap = parseval_gap(dist, spectrum)
        return [
            self.row(f"{label} biased characters", classes["e_count"], allowed,
                     classes["e_count"] <= allowed, strongly=classes["strongly"],
                     witness_subgroup_size=classes["witness_subgroup_size"],
                     inconclusive=classes["inconclusive"]),
            self.row(f"{label} bias after {allowed} exceptions", beyond, epsilon,
                     beyond <= epsilon + BIAS_TOL, max_bias=spectrum.max_bias(),
                     characters=int(biases.size)),
            self.row(f"{label} parseval gap", gap, NORM_TOL, abs(gap) <= NORM_TOL),
        ]
