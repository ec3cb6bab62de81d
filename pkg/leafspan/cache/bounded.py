from collections import OrderedDict
from typing import Any

from leafspan.cache.abc import Cache
from leafspan.cache.entry import Entry
from leafspan.exceptions import ExistingEntry, NonExistentEntry


class BoundedCache(Cache):
    """A least-recently-used cache holding at most ``max_size`` entries."""

    __slots__ = ("cache", "max_size")

    def __init__(self, max_size: int = 256):
        if max_size < 1:
            raise ValueError("max_size must be positive")
        self.max_size = max_size
        self.cache: "OrderedDict[Any, Entry]" = OrderedDict()

    def __contains__(self, item: Any) -> bool:
        return item in self.cache

    def __len__(self) -> int:
        return len(self.cache)

    def add_entry(self, key: Any, value: Any, *, override: bool = False) -> None:
        if key in self and not override:
            raise ExistingEntry

        self.cache[key] = Entry(value=value)
        self.cache.move_to_end(key)
        self.force_clean()

    def delete_entry(self, key: Any) -> None:
        self.cache.pop(key, None)

    def get_entry(self, key: Any) -> Any:
        if key not in self:
            raise NonExistentEntry

        entry = self.cache[key]
        entry.hits += 1
        self.cache.move_to_end(key)
        return entry.value

    def force_clean(self) -> None:
        while len(self.cache) > self.max_size:
            self.cache.popitem(last=False)
