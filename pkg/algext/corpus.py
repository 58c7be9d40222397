"""
algext.corpus
~~~~~~~~~~~~~
The versioned corpus of varieties and polynomial maps shipped with the
package under ``algext/data/corpus/v1``.
"""
import json
import logging
import os
from typing import Any, Dict, List

from .errors import AlgextError, ConfigError
from .variety_lab import AlgebraicSourceSpec, PolynomialMap, VarietySpec

logger = logging.getLogger(__name__)

CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "corpus", "v1")


class CorpusEntry:
    """A named variety with a map into A^n and its (n, k, d) budget.
    """

    def __init__(self, entry_id: str, variety: VarietySpec, poly_map: PolynomialMap,
                 n: int, k: int, d: int, description: str = "") -> None:
        self.id = entry_id
        self.variety = variety
        self.map = poly_map
        self.n = n
        self.k = k
        self.d = d
        self.description = description

    def source_spec(self) -> AlgebraicSourceSpec:
        """
        :raises BoundViolation: the entry breaks its own degree budget
        """
        return AlgebraicSourceSpec(self.variety, self.map, self.n, self.k, self.d)

    def to_json(self) -> Dict[str, Any]:
        return {"id": self.id, "description": self.description,
                "variety": self.variety.to_json(), "map": self.map.to_json(),
                "n": self.n, "k": self.k, "d": self.d}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CorpusEntry":
        return cls(data["id"], VarietySpec.from_json(data["variety"]),
                   PolynomialMap.from_json(data["map"]), int(data["n"]),
                   int(data["k"]), int(data["d"]), data.get("description", ""))


def list_entries(corpus_dir: str = CORPUS_DIR) -> List[str]:
    """Sorted entry ids.

    :raises ConfigError: the corpus directory is missing
    """
    try:
        names = os.listdir(corpus_dir)
    except OSError as err:
        raise ConfigError(f"cannot read corpus {corpus_dir}: {err}") from err
    return sorted(os.path.splitext(name)[0] for name in names if name.endswith(".json"))


def load_entry(entry_id: str, corpus_dir: str = CORPUS_DIR) -> CorpusEntry:
    """Loads one corpus file.

    :param str entry_id: File stem, for example "parabola"
    :raises ConfigError: unknown id or corrupted file
    :rtype: CorpusEntry
    """
    path = os.path.join(corpus_dir, f"{entry_id}.json")
    try:
        with open(path, "r", encoding="utf-8") as file:
            data = json.load(file)
    except FileNotFoundError as err:
        raise ConfigError(f"unknown corpus entry '{entry_id}'") from err
    except (OSError, ValueError) as err:
        raise ConfigError(f"corpus entry '{entry_id}' is corrupted: {err}") from err
    try:
        entry = CorpusEntry.from_json(data)
    except (KeyError, TypeError, ValueError, AlgextError) as err:
        raise ConfigError(f"corpus entry '{entry_id}' is corrupted: {err}") from err
    if entry.id != entry_id:
        raise ConfigError(f"corpus file {entry_id}.json declares id '{entry.id}'")
    logger.debug("loaded corpus entry %s", entry_id)
    return entry


def load_entries(entry_ids: List[str], corpus_dir: str = CORPUS_DIR) -> List[CorpusEntry]:
    return [load_entry(entry_id, corpus_dir) for entry_id in entry_ids]
