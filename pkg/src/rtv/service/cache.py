"""LRU cache for serialized view responses.

Keys are canonical request strings (plus corpus fingerprint). At most one
producer runs per key at a time: concurrent misses on the same key wait
for the first producer and then hit. Producer errors propagate and are
never cached.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Callable


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0
    evictions: int = 0


class ViewCache:
    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError(f"cache capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self.stats = CacheStats()
        self._entries: OrderedDict[str, bytes] = OrderedDict()
        self._lock = threading.Lock()
        self._producing: dict[str, threading.Lock] = {}

    def get_or_compute(self, key: str, producer: Callable[[], bytes]) -> bytes:
        with self._lock:
            if key in self._entries:
                self._entries.move_to_end(key)
                self.stats.hits += 1
                return self._entries[key]
            gate = self._producing.setdefault(key, threading.Lock())

        with gate:
            # another producer may have filled the slot while we waited
            with self._lock:
                if key in self._entries:
                    self._entries.move_to_end(key)
                    self.stats.hits += 1
                    return self._entries[key]
                self.stats.misses += 1
            try:
                value = producer()  # errors propagate, nothing cached
            finally:
                with self._lock:
                    self._producing.pop(key, None)
            with self._lock:
                self._entries[key] = value
                self._entries.move_to_end(key)
                while len(self._entries) > self.capacity:
                    self._entries.popitem(last=False)
                    self.stats.evictions += 1
            return value

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)
