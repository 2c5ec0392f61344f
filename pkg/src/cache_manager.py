"""
Caching system for second-order linear recurrences.
Provides an append-only, thread-safe memo for sequence terms at signed indices.
"""

import logging
import threading
from typing import Any, Callable, Dict, List

logger = logging.getLogger(__name__)


class CacheStats:
    """Statistics for cache performance"""

    def __init__(self):
        self.hits = 0
        self.misses = 0
        self.saves = 0

    @property
    def hit_rate(self) -> float:
        """Calculate cache hit rate"""
        total = self.hits + self.misses
        return self.hits / total if total > 0 else 0.0

    @property
    def total_requests(self) -> int:
        """Total cache requests"""
        return self.hits + self.misses

    def to_dict(self) -> Dict[str, Any]:
        """Convert stats to dictionary"""
        return {
            "hits": self.hits,
            "misses": self.misses,
            "saves": self.saves,
            "hit_rate": self.hit_rate,
            "total_requests": self.total_requests,
        }


class SequenceCache:
    """Memo for a sequence s(n+1) = c*s(n) + s(n-1) over signed indices.

    Terms are stored in two contiguous runs, s(0), s(1), ... and
    s(-1), s(-2), ...; once written an entry never changes.
    """

    def __init__(
        self,
        name: str,
        seed0: Any,
        seed1: Any,
        step: Callable[[Any, Any], Any],
        back_step: Callable[[Any, Any], Any],
        enable_cache: bool = True,
    ):
        self.name = name
        self.enable_cache = enable_cache
        # step(s(n), s(n-1)) -> s(n+1); back_step(s(n+1), s(n)) -> s(n-1)
        self._step = step
        self._back_step = back_step
        self._forward: List[Any] = [seed0, seed1]
        self._backward: List[Any] = []
        self._lock = threading.Lock()

        self.stats = CacheStats()

        logger.debug(f"Sequence cache initialized: {name}, enabled={enable_cache}")

    def get(self, n: int) -> Any:
        """Get the term at signed index n"""
        if not self.enable_cache:
            return self._compute_uncached(n)

        with self._lock:
            if n >= 0:
                if n < len(self._forward):
                    self.stats.hits += 1
                    return self._forward[n]
                self.stats.misses += 1
                self._extend_forward(n)
                return self._forward[n]

            pos = -n - 1
            if pos < len(self._backward):
                self.stats.hits += 1
                return self._backward[pos]
            self.stats.misses += 1
            self._extend_backward(pos)
            return self._backward[pos]

    def _extend_forward(self, n: int) -> None:
        """Append terms up to index n"""
        terms = self._forward
        added = 0
        while len(terms) <= n:
            terms.append(self._step(terms[-1], terms[-2]))
            added += 1
        self.stats.saves += added
        logger.debug(f"{self.name}: extended forward to index {n} (+{added})")

    def _extend_backward(self, pos: int) -> None:
        """Append terms down to index -(pos + 1)"""
        terms = self._backward
        added = 0
        while len(terms) <= pos:
            if not terms:
                upper, current = self._forward[1], self._forward[0]
            elif len(terms) == 1:
                upper, current = self._forward[0], terms[0]
            else:
                upper, current = terms[-2], terms[-1]
            terms.append(self._back_step(upper, current))
            added += 1
        self.stats.saves += added
        logger.debug(f"{self.name}: extended backward to index {-(pos + 1)} (+{added})")

    def _compute_uncached(self, n: int) -> Any:
        """Recompute the term from the seeds without touching the memo"""
        prev, cur = self._forward[0], self._forward[1]
        if n >= 0:
            if n == 0:
                return prev
            for _ in range(n - 1):
                prev, cur = cur, self._step(cur, prev)
            return cur
        upper, current = cur, prev
        for _ in range(-n):
            upper, current = current, self._back_step(upper, current)
        return current

    def clear_all(self) -> int:
        """Drop every computed term except the seeds"""
        with self._lock:
            count = len(self._forward) - 2 + len(self._backward)
            del self._forward[2:]
            self._backward.clear()
        logger.info(f"Cleared {count} cached terms from {self.name}")
        return count

    def get_cache_info(self) -> Dict[str, Any]:
        """Get cache information"""
        with self._lock:
            return {
                "name": self.name,
                "enabled": self.enable_cache,
                "forward_terms": len(self._forward),
                "backward_terms": len(self._backward),
                "statistics": self.stats.to_dict(),
            }
