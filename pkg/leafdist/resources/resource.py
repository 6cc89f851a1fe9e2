from abc import ABC, abstractmethod
from typing import Any, Dict


class Resource(ABC):
    """Exact value object; `as_dict` is what commands and logs see of it."""

    @abstractmethod
    def as_dict(self) -> Dict[str, Any]:
        ...
