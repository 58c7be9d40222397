"""
algext.experiments.base_experiment
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Experiment parent class inherited by specific experiments.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from ..artifacts import content_hash, to_document
from ..config import ExperimentConfig
from ..corpus import CorpusEntry, list_entries, load_entries
from ..errors import AlgextError, ConfigError
from ..finite_field import FieldCtx, parse_field_token

logger = logging.getLogger(__name__)


def jsonable(value: Any) -> Any:
    """Report-safe copy of ``value``: Fractions and numpy scalars become
    floats and ints, tuples become lists.
    """
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (Fraction, float, np.floating)):
        return float(value)
    return value


class BaseExperiment:
    """Abstract base class for experiments. An experiment turns one
    configuration into result rows.

    :attribute KIND: the ``[experiment] kind`` the class serves
    """
    KIND: str = ''

    def __init__(self, config: ExperimentConfig) -> None:
        """Creates a new experiment.

        :param config: Parsed experiment file
        :type config: algext.config.ExperimentConfig
        """
        self.config = config
        self.budgets = config.budgets
        self.artifacts: Dict[str, Dict[str, Any]] = {}

    def run(self) -> List[Dict[str, Any]]:
        """Executes the experiment.

        :return: result rows, each with label, mode, measured, bound and pass
        """
        raise NotImplementedError

    @staticmethod
    def row(label: str, measured: Any, bound: Any, passed: bool, mode: str = "exact",
            **details: Any) -> Dict[str, Any]:
        data = {"label": label, "mode": mode, "measured": measured, "bound": bound,
                "pass": bool(passed)}
        data.update(details)
        return jsonable(data)

    def record(self, obj: Any) -> str:
        """Adds the artifact form of ``obj`` to the report's provenance.

        :return: content hash of the artifact
        """
        document = to_document(obj)
        digest = content_hash(document)
        self.artifacts[digest] = document
        return digest

    def fields(self, key: str = "fields") -> List[FieldCtx]:
        """Fields listed under ``key``, or the ``[experiment] field``.
        """
        if not self.config.has(key):
            return [self.config.ctx]
        ctxs = []
        for token in self.config.get_list(key):
            try:
                ctxs.append(parse_field_token(token))
            except (AlgextError, ValueError) as err:
                raise ConfigError(f"bad field '{token}' in '{key}': {err}") from err
        return ctxs

    def entries(self, key: str = "entries") -> List[CorpusEntry]:
        """Corpus entries listed under ``key``, every entry when absent.
        """
        ids = self.config.get_list(key) if self.config.has(key) else list_entries()
        return load_entries(ids)

    def seed(self, offset: int = 0) -> int:
        return self.config.require_seed() + offset

    def optional_seed(self) -> int:
        return self.config.rng_seed if self.config.rng_seed is not None else 0

    def epsilon(self, key: str = "epsilon", default: Optional[Any] = None) -> Any:
        value = self.config.get_number(key, default)
        if value <= 0:
            raise ConfigError(f"param '{key}' must be positive, got {value}")
        return value
