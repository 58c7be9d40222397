"""
algext.config
~~~~~~~~~~~~~
Experiment configuration files: one experiment per INI file.
"""
import configparser
import logging
import os
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from .constants import DFT_BUDGET, ENUMERATION_BUDGET, SAMPLE_BUDGET
from .errors import AlgextError, ConfigError
from .finite_field import FieldCtx, parse_field_token
from .utils import parse_number

logger = logging.getLogger(__name__)

KINDS: List[str] = [
    "bias-spectrum",
    "rank-survey",
    "fiber-check",
    "gabidulin-rank",
    "gabidulin-norms",
    "lowbias-extract",
    "mod-m",
    "point-count",
    "bombieri",
    "ext11",
    "extN1",
    "full-rank",
    "composition",
    "min-entropy",
    "affine",
    "weil-check",
    "xor-lemma",
    "seeded-extractor",
]

BUDGET_OVERRIDE_ENV = "ALGEXT_BUDGET_OVERRIDE"

Number = Union[int, float, Fraction]


class Budgets:
    """Work limits of one experiment.

    :attribute enumeration: points or evaluations enumerated exactly
    :attribute dft: entries of a single DFT
    :attribute samples: draws in sampled modes
    """
    NAMES = ("enumeration", "dft", "samples")

    def __init__(self, enumeration: int = ENUMERATION_BUDGET, dft: int = DFT_BUDGET,
                 samples: int = SAMPLE_BUDGET) -> None:
        self.enumeration = enumeration
        self.dft = dft
        self.samples = samples
        for name in self.NAMES:
            if getattr(self, name) <= 0:
                raise ConfigError(f"budget {name} must be positive, got {getattr(self, name)}")

    def capped(self, caps: Dict[str, int]) -> "Budgets":
        """Budgets no larger than ``caps``.
        """
        values = {name: min(getattr(self, name), caps.get(name, getattr(self, name)))
                  for name in self.NAMES}
        return Budgets(**values)

    def to_json(self) -> Dict[str, int]:
        return {name: getattr(self, name) for name in self.NAMES}


def parse_budget_override(text: str) -> Dict[str, int]:
    """``enumeration=2^20,samples=1000`` to a dict of caps.

    :raises ConfigError: unknown budget name or non-integer value
    """
    caps: Dict[str, int] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in Budgets.NAMES:
            raise ConfigError(f"unknown budget '{name}' in {BUDGET_OVERRIDE_ENV}")
        try:
            number = parse_number(value.strip())
        except ValueError as err:
            raise ConfigError(f"bad value for budget '{name}': {value}") from err
        if not isinstance(number, int) or number <= 0:
            raise ConfigError(f"budget '{name}' must be a positive integer, got {value}")
        caps[name] = number
    return caps


class ExperimentConfig:
    """A parsed experiment file.

    Sections:

        [experiment]  kind, field, rng_seed, criterion, shards, description
        [params]      kind-specific values
        [budgets]     enumeration, dft, samples
        [output]      report, csv
    """

    def __init__(self, kind: str, params: Optional[Dict[str, str]] = None,
                 field: Optional[str] = None, rng_seed: Optional[int] = None,
                 criterion: Optional[int] = None, shards: int = 1,
                 description: str = "", budgets: Optional[Budgets] = None,
                 report: Optional[str] = None, csv: Optional[str] = None,
                 path: Optional[str] = None) -> None:
        if kind not in KINDS:
            raise ConfigError(f"unknown experiment kind '{kind}'")
        if shards < 1:
            raise ConfigError(f"shards must be at least 1, got {shards}")
        self.kind = kind
        self.params = dict(params or {})
        self.field = field
        self.rng_seed = rng_seed
        self.criterion = criterion
        self.shards = shards
        self.description = description
        self.budgets = budgets or Budgets()
        self.report = report
        self.csv = csv
        self.path = path

    @property
    def name(self) -> str:
        """File stem, or the kind when the config was built in memory.
        """
        if self.path:
            return os.path.splitext(os.path.basename(self.path))[0]
        return self.kind

    @property
    def ctx(self) -> FieldCtx:
        """The field named by ``[experiment] field``.

        :raises ConfigError: no field given or a malformed token
        """
        if not self.field:
            raise ConfigError(f"experiment '{self.name}' needs a field")
        try:
            return parse_field_token(self.field)
        except (AlgextError, ValueError) as err:
            raise ConfigError(f"bad field '{self.field}': {err}") from err

    def require_seed(self) -> int:
        """Seed of a sampled mode.

        :raises ConfigError: rng_seed missing
        """
        if self.rng_seed is None:
            raise ConfigError(f"experiment '{self.name}' samples and needs rng_seed")
        return self.rng_seed

    def has(self, key: str) -> bool:
        return key in self.params

    def get_str(self, key: str, default: Optional[str] = None) -> str:
        if key not in self.params:
            if default is None:
                raise ConfigError(f"experiment '{self.name}' is missing param '{key}'")
            return default
        return self.params[key].strip()

    def get_number(self, key: str, default: Optional[Number] = None) -> Number:
        if key not in self.params and default is not None:
            return default
        raw = self.get_str(key)
        try:
            return parse_number(raw)
        except ValueError as err:
            raise ConfigError(f"param '{key}' is not a number: {raw}") from err

    def get_int(self, key: str, default: Optional[int] = None) -> int:
        value = self.get_number(key, default)
        if not isinstance(value, int):
            raise ConfigError(f"param '{key}' must be an integer, got {value}")
        return value

    def get_list(self, key: str, default: Optional[List[str]] = None) -> List[str]:
        if key not in self.params and default is not None:
            return list(default)
        return [part.strip() for part in self.get_str(key).split(",") if part.strip()]

    def get_int_list(self, key: str, default: Optional[List[int]] = None) -> List[int]:
        if key not in self.params and default is not None:
            return list(default)
        values = []
        for raw in self.get_list(key):
            try:
                value = parse_number(raw)
            except ValueError as err:
                raise ConfigError(f"param '{key}' has a non-number entry: {raw}") from err
            if not isinstance(value, int):
                raise ConfigError(f"param '{key}' has a non-integer entry: {raw}")
            values.append(value)
        return values

    def get_bool(self, key: str, default: bool = False) -> bool:
        if key not in self.params:
            return default
        raw = self.params[key].strip().lower()
        if raw in ("1", "true", "yes", "on"):
            return True
        if raw in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"param '{key}' is not a boolean: {raw}")

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "field": self.field,
            "rng_seed": self.rng_seed,
            "criterion": self.criterion,
            "shards": self.shards,
            "description": self.description,
            "params": dict(sorted(self.params.items())),
            "budgets": self.budgets.to_json(),
        }


def _optional_int(section: configparser.SectionProxy, key: str) -> Optional[int]:
    if key not in section:
        return None
    try:
        return int(section[key])
    except ValueError as err:
        raise ConfigError(f"'{key}' must be an integer, got {section[key]}") from err


def _read_budgets(parser: configparser.ConfigParser) -> Budgets:
    values: Dict[str, int] = {}
    if parser.has_section("budgets"):
        for name, raw in parser["budgets"].items():
            if name not in Budgets.NAMES:
                raise ConfigError(f"unknown budget '{name}'")
            try:
                number = parse_number(raw)
            except ValueError as err:
                raise ConfigError(f"budget '{name}' is not a number: {raw}") from err
            if not isinstance(number, int):
                raise ConfigError(f"budget '{name}' must be an integer, got {raw}")
            values[name] = number
    budgets = Budgets(**values)
    override = os.getenv(BUDGET_OVERRIDE_ENV)
    if override:
        caps = parse_budget_override(override)
        logger.warning("budgets capped by %s: %s", BUDGET_OVERRIDE_ENV, caps)
        budgets = budgets.capped(caps)
    return budgets


def load_config(path: str) -> ExperimentConfig:
    """Reads an experiment file.

    :param str path: Path to the INI file
    :raises ConfigError: missing or malformed file, unknown kind, bad budgets
    :rtype: ExperimentConfig
    """
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # type: ignore[assignment]
    try:
        with open(path, "r", encoding="utf-8") as file:
            parser.read_file(file)
    except OSError as err:
        raise ConfigError(f"cannot read config {path}: {err}") from err
    except configparser.Error as err:
        raise ConfigError(f"malformed config {path}: {err}") from err

    if not parser.has_section("experiment"):
        raise ConfigError(f"config {path} has no [experiment] section")
    section = parser["experiment"]
    if "kind" not in section:
        raise ConfigError(f"config {path} does not name an experiment kind")
    output = parser["output"] if parser.has_section("output") else {}
    shards = _optional_int(section, "shards")
    config = ExperimentConfig(
        kind=section["kind"].strip(),
        params=dict(parser["params"]) if parser.has_section("params") else {},
        field=section.get("field"),
        rng_seed=_optional_int(section, "rng_seed"),
        criterion=_optional_int(section, "criterion"),
        shards=1 if shards is None else shards,
        description=section.get("description", ""),
        budgets=_read_budgets(parser),
        report=output.get("report"),
        csv=output.get("csv"),
        path=path,
    )
    logger.debug("loaded %s experiment from %s", config.kind, path)
    return config
