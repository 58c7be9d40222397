"""
algext.collections.base_collection
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
Collection parent class inherited by specific collections.
"""
from typing import Any, Dict, Iterator, List

from ..models.base_model import BaseModel


class BaseCollection:
    """Ordered models built from the list a report keeps under DATA_KEY,
    e.g. {"kind": "weil-check", "rows": [{"label": "d=3"}, ...]} with
    DATA_KEY "rows". Order is the order the experiment emitted.

    :attribute MODEL_KLASS: model class wrapped around each list entry.
    """
    DATA_KEY: str = ''
    MODEL_KLASS: Any = BaseModel

    def __init__(self, raw_data: Dict[str, Any]) -> None:
        self.items: List[Any] = [
            self.MODEL_KLASS(entry)  # pylint: disable=E1102
            for entry in raw_data.get(self.DATA_KEY) or []
        ]

    def __getitem__(self, index: int) -> Any:
        return self.items[index]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.items)

    def __bool__(self) -> bool:
        return bool(self.items)
