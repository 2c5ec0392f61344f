"""
k-Fibonacci and k-Lucas sequences over exact scalars.
Signed indices, O(log n) fast doubling for integer k, and floating-point Binet forms.
"""

import logging
import math
from typing import Any, Dict, Optional, Tuple

from src.cache_manager import SequenceCache
from src.config import get_cache_config
from src.ring import Poly, Scalar, ScalarMode

logger = logging.getLogger(__name__)


class KContext:
    """Evaluation context: a fixed integer k >= 1, or k as a polynomial indeterminate.

    Holds one memo per sequence; both are append-only and lock protected,
    so a context can be shared between threads.
    """

    def __init__(self, k: Optional[int] = None, enable_cache: Optional[bool] = None):
        if k is None:
            self.mode = ScalarMode.SYMK
            self.k: Scalar = Poly.k()
        else:
            if isinstance(k, bool) or not isinstance(k, int):
                raise ValueError(f"k must be an integer, got {k!r}")
            if k < 1:
                raise ValueError(f"integer mode requires k >= 1, got {k}")
            self.mode = ScalarMode.INT
            self.k = k

        if enable_cache is None:
            enable_cache = get_cache_config()['enable_cache']

        kk = self.k

        def step(cur, prev):
            return kk * cur + prev

        def back_step(upper, cur):
            return upper - kk * cur

        self._fib = SequenceCache("fib", self.mode.zero, self.mode.one, step, back_step, enable_cache)
        self._lucas = SequenceCache("lucas", self.mode.const(2), kk, step, back_step, enable_cache)

        logger.debug(f"KContext created: k={self.label}, cache={enable_cache}")

    @classmethod
    def integer(cls, k: int, enable_cache: Optional[bool] = None) -> "KContext":
        return cls(k, enable_cache)

    @classmethod
    def symbolic(cls, enable_cache: Optional[bool] = None) -> "KContext":
        return cls(None, enable_cache)

    @classmethod
    def parse(cls, text: str) -> "KContext":
        """Build a context from 'sym' or a positive decimal integer"""
        value = text.strip().lower()
        if value in ("sym", "symbolic", "k"):
            return cls.symbolic()
        try:
            k = int(value)
        except ValueError:
            raise ValueError(f"k must be 'sym' or a positive integer, got {text!r}") from None
        return cls.integer(k)

    @property
    def label(self) -> str:
        return "sym" if self.mode is ScalarMode.SYMK else str(self.k)

    def const(self, value: int) -> Scalar:
        return self.mode.const(value)

    def fib(self, n: int) -> Scalar:
        return self._fib.get(n)

    def lucas(self, n: int) -> Scalar:
        return self._lucas.get(n)

    def cache_info(self) -> Dict[str, Any]:
        return {
            "fib": self._fib.get_cache_info(),
            "lucas": self._lucas.get_cache_info(),
        }

    def __repr__(self) -> str:
        return f"KContext(k={self.label})"


def fib(ctx: KContext, n: int) -> Scalar:
    """F(k, n) for any signed n"""
    return ctx.fib(n)


def lucas(ctx: KContext, n: int) -> Scalar:
    """L(k, n) for any signed n, with L(k, 0) = 2 and L(k, 1) = k"""
    return ctx.lucas(n)


def fib_pair_fastdouble(k: int, n: int) -> Tuple[int, int]:
    """Return (F(k, n), F(k, n+1)) in O(log n) big-integer operations.

    Uses F(2m) = F(m) * (2F(m+1) - k*F(m)) and F(2m+1) = F(m)^2 + F(m+1)^2.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"fast doubling requires an integer k >= 1, got {k!r}")
    if n < 0:
        raise ValueError(f"fast doubling requires n >= 0, got {n}")

    a, b = 0, 1
    for bit in bin(n)[2:]:
        even = a * (2 * b - k * a)
        odd = a * a + b * b
        if bit == "1":
            a, b = odd, k * odd + even
        else:
            a, b = even, odd
    return a, b


def binet_roots(k: float) -> Tuple[float, float, float]:
    """Return (alpha, beta, alpha - beta) for the roots of x^2 - kx - 1"""
    if k <= 0:
        raise ValueError(f"Binet evaluation requires k > 0, got {k}")
    root = math.sqrt(k * k + 4)
    return (k + root) / 2, (k - root) / 2, root


def _overflow(k: float, n: int) -> ValueError:
    return ValueError(f"Binet evaluation overflows double precision at k={k}, n={n}")


def binet_fib_float(k: float, n: int) -> float:
    """F(k, n) from the Binet closed form in double precision"""
    if n < 0:
        raise ValueError(f"Binet evaluation requires n >= 0, got {n}")
    alpha, beta, root = binet_roots(k)
    try:
        return (alpha ** n - beta ** n) / root
    except OverflowError as e:
        raise _overflow(k, n) from e


def binet_lucas_float(k: float, n: int) -> float:
    """L(k, n) = alpha^n + beta^n in double precision"""
    if n < 0:
        raise ValueError(f"Binet evaluation requires n >= 0, got {n}")
    alpha, beta, _ = binet_roots(k)
    try:
        return alpha ** n + beta ** n
    except OverflowError as e:
        raise _overflow(k, n) from e
