"""
Commutative bicomplex algebra over exact scalars.
Basis {1, i, j, ij} with i^2 = j^2 = -1, ij = ji and (ij)^2 = 1.
"""

from enum import Enum
from typing import Tuple

from src.ring import ModeMismatchError, Scalar, ScalarMode, ensure_same_mode, mode_of, scalar_eval


class Conjugation(str, Enum):
    """The three bicomplex conjugations, named by the units they negate besides ij"""
    I = "i"    # negates i and ij
    J = "j"    # negates j and ij
    IJ = "ij"  # negates i and j


class Bicomplex:
    """Immutable bicomplex number w + x*i + y*j + z*ij"""

    __slots__ = ("w", "x", "y", "z", "mode")

    def __init__(self, w: Scalar, x: Scalar, y: Scalar, z: Scalar):
        mode = ensure_same_mode(w, x, y, z)
        for name, value in (("w", w), ("x", x), ("y", y), ("z", z), ("mode", mode)):
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("Bicomplex is immutable")

    @classmethod
    def zero(cls, mode: ScalarMode) -> "Bicomplex":
        z = mode.zero
        return cls(z, z, z, z)

    @classmethod
    def one(cls, mode: ScalarMode) -> "Bicomplex":
        z = mode.zero
        return cls(mode.one, z, z, z)

    @classmethod
    def from_scalar(cls, value: Scalar) -> "Bicomplex":
        """Embed a scalar with zero i, j and ij parts"""
        z = mode_of(value).zero
        return cls(value, z, z, z)

    @classmethod
    def basis(cls, unit: str, mode: ScalarMode) -> "Bicomplex":
        """Basis element by name: '1', 'i', 'j' or 'ij'"""
        order = ("1", "i", "j", "ij")
        if unit not in order:
            raise ValueError(f"unknown basis unit: {unit}")
        parts = [mode.one if u == unit else mode.zero for u in order]
        return cls(*parts)

    def components(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.w, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return all(c == self.mode.zero for c in self.components())

    def evaluate(self, x: int) -> "Bicomplex":
        """Substitute k = x in every component"""
        return Bicomplex(*(scalar_eval(c, x) for c in self.components()))

    def _check(self, other: "Bicomplex") -> None:
        if not isinstance(other, Bicomplex):
            raise TypeError(f"expected Bicomplex, got {type(other).__name__}")
        if other.mode is not self.mode:
            raise ModeMismatchError(
                f"cannot combine {self.mode.value} and {other.mode.value} bicomplex values"
            )

    def __add__(self, other: "Bicomplex") -> "Bicomplex":
        self._check(other)
        return Bicomplex(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Bicomplex") -> "Bicomplex":
        self._check(other)
        return Bicomplex(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: "Bicomplex") -> "Bicomplex":
        self._check(other)
        w1, x1, y1, z1 = self.components()
        w2, x2, y2, z2 = other.components()
        return Bicomplex(
            w1 * w2 - x1 * x2 - y1 * y2 + z1 * z2,
            w1 * x2 + x1 * w2 - y1 * z2 - z1 * y2,
            w1 * y2 + y1 * w2 - x1 * z2 - z1 * x2,
            w1 * z2 + z1 * w2 + x1 * y2 + y1 * x2,
        )

    def scale(self, r: Scalar) -> "Bicomplex":
        if mode_of(r) is not self.mode:
            raise ModeMismatchError(
                f"cannot scale {self.mode.value} bicomplex by {mode_of(r).value} scalar"
            )
        return Bicomplex(r * self.w, r * self.x, r * self.y, r * self.z)

    def conj(self, kind: Conjugation) -> "Bicomplex":
        kind = Conjugation(kind)
        if kind is Conjugation.I:
            return Bicomplex(self.w, -self.x, self.y, -self.z)
        if kind is Conjugation.J:
            return Bicomplex(self.w, self.x, -self.y, -self.z)
        return Bicomplex(self.w, -self.x, -self.y, self.z)

    def norm_form(self, kind: Conjugation) -> "Bicomplex":
        """The exact product q * q^kind (radicand of the norm, no square root)"""
        return self * self.conj(kind)

    def __eq__(self, other) -> bool:
        if isinstance(other, Bicomplex):
            return self.mode is other.mode and self.components() == other.components()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Bicomplex", self.components()))

    def __repr__(self) -> str:
        return f"Bicomplex({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self) -> str:
        def wrap(value: Scalar) -> str:
            text = str(value)
            return f"({text})" if " " in text or text.startswith("-") else text

        return f"{self.w} + {wrap(self.x)}*i + {wrap(self.y)}*j + {wrap(self.z)}*ij"


def bc_add(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return a + b


def bc_sub(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return a - b


def bc_neg(a: Bicomplex) -> Bicomplex:
    return -a


def bc_mul(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return a * b


def bc_conj(a: Bicomplex, kind: Conjugation) -> Bicomplex:
    return a.conj(kind)


def bc_norm_form(a: Bicomplex, kind: Conjugation) -> Bicomplex:
    return a.norm_form(kind)


def bc_scalar_mul(r: Scalar, a: Bicomplex) -> Bicomplex:
    return a.scale(r)


def bc_eval(a: Bicomplex, x: int) -> Bicomplex:
    return a.evaluate(x)
