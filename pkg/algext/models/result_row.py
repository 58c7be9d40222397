"""
algext.models.result_row
~~~~~~~~~~~~~~~~~~~~~~~~
Module containing result row model.
"""
from typing import Any, Dict

from .base_model import BaseModel


class ResultRowModel(BaseModel):
    """One measured-against-bound row of an experiment.

    ``mode`` records provenance: "exact", "sampled(N)", "monte_carlo(N)"
    or "heuristic".
    """
    ATTRS = [
        "label",
        "mode",
        "measured",
        "bound",
    ]

    @property
    def passed(self) -> bool:
        return bool(self.raw_data.get("pass", False))

    @property
    def details(self) -> Dict[str, Any]:
        """Row fields other than the common ones.
        """
        common = set(self.ATTRS) | {"pass"}
        return {k: v for k, v in self.raw_data.items() if k not in common}
