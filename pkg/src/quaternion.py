"""
Bicomplex k-Fibonacci and k-Lucas quaternions.
Construction, scalar/vector parts, conjugates, norm forms and numeric Binet forms.
"""

from enum import Enum
from typing import Tuple

from src.bicomplex import Bicomplex, Conjugation
from src.kfib import KContext, binet_fib_float, binet_lucas_float
from src.ring import Scalar


class SequenceKind(str, Enum):
    FIBONACCI = "fib"
    LUCAS = "lucas"


class BKFQuaternion:
    """A bicomplex value (S(n), S(n+1), S(n+2), S(n+3)) for S = F or L"""

    __slots__ = ("value", "kind", "index", "mode")

    def __init__(self, value: Bicomplex, kind: SequenceKind, index: int):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "kind", SequenceKind(kind))
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "mode", value.mode)

    def __setattr__(self, name, value):
        raise AttributeError("BKFQuaternion is immutable")

    def rebuild(self, ctx: KContext) -> Bicomplex:
        """Recompute the value from (kind, index) in the given context"""
        return _build(ctx, self.kind, self.index).value

    def __eq__(self, other) -> bool:
        if isinstance(other, BKFQuaternion):
            return (self.kind, self.index, self.value) == (other.kind, other.index, other.value)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.kind, self.index, self.value))

    def __repr__(self) -> str:
        name = "QF" if self.kind is SequenceKind.FIBONACCI else "QL"
        return f"{name}({self.index}) = {self.value}"


def _build(ctx: KContext, kind: SequenceKind, n: int) -> BKFQuaternion:
    term = ctx.fib if kind is SequenceKind.FIBONACCI else ctx.lucas
    value = Bicomplex(term(n), term(n + 1), term(n + 2), term(n + 3))
    return BKFQuaternion(value, kind, n)


def qf(ctx: KContext, n: int) -> BKFQuaternion:
    """Bicomplex k-Fibonacci quaternion F(n) + i F(n+1) + j F(n+2) + ij F(n+3)"""
    return _build(ctx, SequenceKind.FIBONACCI, n)


def ql(ctx: KContext, n: int) -> BKFQuaternion:
    """Bicomplex k-Lucas quaternion L(n) + i L(n+1) + j L(n+2) + ij L(n+3)"""
    return _build(ctx, SequenceKind.LUCAS, n)


def parts(q: BKFQuaternion) -> Tuple[Scalar, Bicomplex]:
    """Scalar part and bicomplex vector part; S + V == q.value"""
    zero = q.mode.zero
    return q.value.w, Bicomplex(zero, q.value.x, q.value.y, q.value.z)


def qf_conj(q: BKFQuaternion, kind: Conjugation) -> Bicomplex:
    return q.value.conj(kind)


def qf_norm_form(q: BKFQuaternion, kind: Conjugation) -> Bicomplex:
    return q.value.norm_form(kind)


def binet_qf_float(k: float, n: int) -> Tuple[float, float, float, float]:
    """Components of (a_hat * alpha^n - b_hat * beta^n) / (alpha - beta)"""
    if n < 0:
        raise ValueError(f"Binet evaluation requires n >= 0, got {n}")
    return tuple(binet_fib_float(k, n + c) for c in range(4))


def binet_ql_float(k: float, n: int) -> Tuple[float, float, float, float]:
    """Components of a_hat * alpha^n + b_hat * beta^n"""
    if n < 0:
        raise ValueError(f"Binet evaluation requires n >= 0, got {n}")
    return tuple(binet_lucas_float(k, n + c) for c in range(4))
