"""
Exact coefficient arithmetic for the k-Fibonacci toolkit.
Provides arbitrary-precision integer scalars and dense univariate polynomials in k.
"""

from enum import Enum
from typing import Iterable, Tuple, Union


class ModeMismatchError(ValueError):
    """Raised when integer and polynomial scalars are combined"""


class Poly:
    """Dense polynomial in k with integer coefficients, ascending by degree.

    Instances are immutable and always canonical: no trailing zero
    coefficient, and the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = list(coeffs)
        for c in values:
            if not isinstance(c, int):
                raise TypeError(f"Poly coefficients must be integers, got {c!r}")
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "_coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, value: int) -> "Poly":
        return cls((value,))

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> "Poly":
        if degree < 0:
            raise ValueError(f"negative degree: {degree}")
        return cls([0] * degree + [coeff])

    @classmethod
    def k(cls) -> "Poly":
        """The indeterminate k itself"""
        return cls((0, 1))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree of the polynomial, None for the zero polynomial"""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other) -> "Poly":
        if not isinstance(other, Poly):
            raise ModeMismatchError(
                f"cannot combine polynomial scalar with {type(other).__name__}"
            )
        return other

    def __add__(self, other) -> "Poly":
        other = self._check(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for d, c in enumerate(b):
            out[d] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "Poly":
        return self._check(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._check(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def evaluate(self, x: int) -> int:
        """Horner evaluation at an integer point"""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self._coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for d in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = "k" if d == 1 else f"k^{d}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = f"-{first_body}" if first_sign == "-" else first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


Scalar = Union[int, Poly]


class ScalarMode(str, Enum):
    """Evaluation mode of a scalar: fixed integer k or symbolic k"""
    INT = "int"
    SYMK = "symk"

    def const(self, value: int) -> Scalar:
        """Embed an integer constant in this mode"""
        return int(value) if self is ScalarMode.INT else Poly.constant(value)

    @property
    def zero(self) -> Scalar:
        return self.const(0)

    @property
    def one(self) -> Scalar:
        return self.const(1)


def mode_of(value: Scalar) -> ScalarMode:
    """Return the mode tag of a scalar"""
    if isinstance(value, Poly):
        return ScalarMode.SYMK
    if isinstance(value, int) and not isinstance(value, bool):
        return ScalarMode.INT
    raise TypeError(f"not a scalar: {value!r}")


def ensure_same_mode(*values: Scalar) -> ScalarMode:
    """Check that all scalars share one mode and return it"""
    if not values:
        raise ValueError("at least one scalar is required")
    mode = mode_of(values[0])
    for v in values[1:]:
        if mode_of(v) is not mode:
            raise ModeMismatchError(f"mixed scalar modes: {mode.value} and {mode_of(v).value}")
    return mode


def scalar_eval(value: Scalar, x: int) -> int:
    """Evaluate a scalar at k = x (integers are returned unchanged)"""
    return value.evaluate(x) if isinstance(value, Poly) else value


def render_scalar(value: Scalar) -> str:
    """Report rendering of a scalar"""
    return str(value)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_sub(p: Poly, q: Poly) -> Poly:
    return p - q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval(p: Poly, x: int) -> int:
    return p.evaluate(x)
