"""
algext.models.base_model
~~~~~~~~~~~~~~~~~~~~~~~~
Model parent class inherited by specific models.
"""
from typing import Any, Dict, List


class BaseModel:
    """Read-only view over a plain dict produced by an experiment.

    :attribute ATTRS: fields copied onto the model as attributes. Fields the
    dict lacks become None; fields not listed stay reachable via `raw_data`.
    """
    ATTRS: List[str] = []

    def __init__(self, raw_data: Dict[str, Any]) -> None:
        """
        :param raw_data: The dict exactly as the experiment emitted it; it is
        what gets serialized back out
        """
        self.raw_data = raw_data
        for attr in self.ATTRS:
            setattr(self, attr, raw_data.get(attr))

    def get(self, key: str, default: Any = None) -> Any:
        return self.raw_data.get(key, default)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BaseModel):
            return NotImplemented
        return type(self) is type(other) and self.raw_data == other.raw_data

    def __repr__(self) -> str:
        shown = ", ".join(f"{attr}={getattr(self, attr)!r}" for attr in self.ATTRS[:2])
        return f"{type(self).__name__}({shown})"

    def __str__(self) -> str:
        return "\n".join(f"{attr}: {getattr(self, attr)}" for attr in self.ATTRS)
