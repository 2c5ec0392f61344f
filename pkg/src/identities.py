"""
Identity registry, verifier and auditor for bicomplex k-Fibonacci quaternions.
Each entry builds the printed left- and right-hand sides exactly; verification is exact equality.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from functools import reduce
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from src.bicomplex import Bicomplex, Conjugation
from src.kfib import KContext
from src.quaternion import qf, ql
from src.ring import Scalar

logger = logging.getLogger(__name__)

AXES = ("n", "m", "r")

Sides = Tuple[Bicomplex, Bicomplex]


class ParameterDomainError(ValueError):
    """Raised when parameters do not match an identity's arity or index domain"""


class IdentityId(str, Enum):
    SEC2_MUL = "sec2-mul"
    QUAT_MUL = "quat-mul"
    CONJ_I_PROD = "conj-i-prod"
    CONJ_J_PROD = "conj-j-prod"
    CONJ_IJ_PROD = "conj-ij-prod"
    NORM_I = "norm-i"
    NORM_J = "norm-j"
    NORM_IJ = "norm-ij"
    RECURRENCE = "recurrence"
    SQUARE = "square"
    SQ_SUM = "sq-sum"
    SQ_DIFF = "sq-diff"
    ALT_COMB_A = "alt-comb-a"
    ALT_COMB_B = "alt-comb-b"
    LUCAS_SUM = "lucas-sum"
    LUCAS_DIFF = "lucas-diff"
    HONSBERGER = "honsberger"
    DOCAGNE = "docagne"
    SUM_ALL = "sum-all"
    SUM_ODD = "sum-odd"
    SUM_EVEN = "sum-even"
    CASSINI = "cassini"
    CATALAN = "catalan"


class IndexRange(BaseModel):
    """Inclusive signed index range a..b"""
    model_config = ConfigDict(frozen=True)

    start: int
    stop: int

    @model_validator(mode="after")
    def check_order(self):
        if self.stop < self.start:
            raise ValueError(f"empty range {self.start}..{self.stop}")
        return self

    def values(self) -> range:
        return range(self.start, self.stop + 1)

    def __str__(self) -> str:
        return f"{self.start}..{self.stop}"


class ParamGrid(BaseModel):
    """Evaluation mode plus one inclusive range per used axis"""
    model_config = ConfigDict(frozen=True)

    mode: str
    n: Optional[IndexRange] = None
    m: Optional[IndexRange] = None
    r: Optional[IndexRange] = None

    def axes(self) -> Dict[str, IndexRange]:
        return {name: getattr(self, name) for name in AXES if getattr(self, name) is not None}

    def points(self) -> Iterator[Dict[str, int]]:
        """Grid points in lexicographic (n, m, r) ascending order"""
        axes = self.axes()
        names = list(axes)
        for combo in itertools.product(*(axes[name].values() for name in names)):
            yield dict(zip(names, combo))


class FailureRecord(BaseModel):
    """First failing grid point with both sides and their exact difference"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    params: Dict[str, int]
    lhs: Bicomplex
    rhs: Bicomplex
    discrepancy: Bicomplex


class VerificationReport(BaseModel):
    """Outcome of checking one identity over one grid"""
    model_config = ConfigDict(frozen=True)

    identity: IdentityId
    grid: ParamGrid
    checked: int
    passed: int
    first_failure: Optional[FailureRecord] = None

    @model_validator(mode="after")
    def check_counts(self):
        if not 0 <= self.passed <= self.checked:
            raise ValueError(f"passed={self.passed} outside 0..checked={self.checked}")
        if (self.first_failure is not None) != (self.passed < self.checked):
            raise ValueError("first_failure must be present exactly when a point failed")
        return self

    @property
    def holds(self) -> bool:
        return self.passed == self.checked

    @property
    def verdict(self) -> str:
        return "PASS" if self.holds else "FAIL"


class IdentitySpec(BaseModel):
    """Registry entry: stated equation, parameters, builder and default grids"""
    model_config = ConfigDict(frozen=True)

    identity: IdentityId
    equation: str
    params: Tuple[str, ...]
    builder: Callable[..., Sides]
    default: Dict[str, Tuple[int, int]]
    extended: Optional[Dict[str, Tuple[int, int]]] = None
    minimum: Dict[str, int] = {}
    point_filter: Optional[Callable[[Dict[str, int]], bool]] = None

    def accepts(self, point: Mapping[str, int]) -> bool:
        return self.point_filter is None or self.point_filter(dict(point))


class _Terms:
    """Shorthand for sequence terms and constants in one context"""

    def __init__(self, ctx: KContext):
        self.ctx = ctx
        self.mode = ctx.mode
        self.k = ctx.k
        self.zero = ctx.mode.zero

    def F(self, n: int) -> Scalar:
        return self.ctx.fib(n)

    def L(self, n: int) -> Scalar:
        return self.ctx.lucas(n)

    def Q(self, n: int) -> Bicomplex:
        return qf(self.ctx, n).value

    def QL(self, n: int) -> Bicomplex:
        return ql(self.ctx, n).value

    def c(self, value: int) -> Scalar:
        return self.ctx.const(value)

    def sign(self, exponent: int) -> Scalar:
        """(-1)^exponent as a scalar"""
        return self.c(1 if exponent % 2 == 0 else -1)

    def unit(self, name: str) -> Bicomplex:
        return Bicomplex.basis(name, self.mode)

    def bc(self, w=None, x=None, y=None, z=None) -> Bicomplex:
        z0 = self.zero
        return Bicomplex(
            z0 if w is None else w,
            z0 if x is None else x,
            z0 if y is None else y,
            z0 if z is None else z,
        )

    def total(self, values) -> Bicomplex:
        return reduce(lambda acc, b: acc + b, values, Bicomplex.zero(self.mode))

    def cassini_bracket(self) -> Bicomplex:
        """2(k^2 + 2) j + (k^3 + 2k) ij"""
        k, c = self.k, self.c
        return self.bc(y=c(2) * (k * k + c(2)), z=k * k * k + c(2) * k)


# --- builders: left side as stated, right side as printed ---------------------

def _sec2_mul(t: _Terms, n: int, m: int) -> Sides:
    F, c = t.F, t.c
    lhs = t.Q(n) * t.Q(m)
    rhs = t.bc(
        F(n) * F(m) - F(n + 1) * F(m + 1) - F(n + 2) * F(m + 2) - F(n + 3) * F(m + 3),
        F(n) * F(m + 1) + F(n + 1) * F(m) - F(n + 2) * F(m + 3) - F(n + 3) * F(m + 2),
        F(n) * F(m + 2) + F(n + 2) * F(m) - F(n + 1) * F(m + 3) - F(n + 3) * F(m + 1),
        F(n) * F(m + 3) + F(n + 3) * F(m) + F(n + 1) * F(m + 2) + F(n + 2) * F(m + 1),
    )
    return lhs, rhs


def _quat_mul(t: _Terms, n: int, m: int) -> Sides:
    F = t.F
    lhs = t.Q(n) * t.Q(m)
    rhs = t.bc(
        F(n) * F(m) - F(n + 1) * F(m + 1) - F(n + 2) * F(m + 2) + F(n + 3) * F(m + 3),
        F(n) * F(m + 1) + F(n + 1) * F(m) - F(n + 2) * F(m + 3) - F(n + 3) * F(m + 2),
        F(n) * F(m + 2) - F(n + 1) * F(m + 3) + F(n + 2) * F(m) - F(n + 3) * F(m + 1),
        F(n) * F(m + 3) + F(n + 1) * F(m + 2) + F(n + 2) * F(m + 1) + F(n + 3) * F(m),
    )
    return lhs, rhs


def _conj_i_rhs(t: _Terms, n: int) -> Bicomplex:
    F, c = t.F, t.c
    return t.bc(F(2 * n + 1) - F(2 * n + 5), y=c(2) * F(2 * n + 3))


def _conj_ij_rhs(t: _Terms, n: int) -> Bicomplex:
    F, c = t.F, t.c
    return t.bc(F(2 * n + 1) + F(2 * n + 5), z=c(2) * t.sign(n + 1) * t.k)


def _conj_i_prod(t: _Terms, n: int) -> Sides:
    q = t.Q(n)
    return q * q.conj(Conjugation.I), _conj_i_rhs(t, n)


def _conj_j_prod(t: _Terms, n: int) -> Sides:
    F, c, k = t.F, t.c, t.k
    q = t.Q(n)
    rhs = t.bc(
        F(n) * F(n) - F(n + 1) * F(n + 1) + F(n + 2) * F(n + 2) - F(n + 3) * F(n + 3),
        c(2) * (c(2) * F(n) * F(n + 1) + k * F(2 * n + 3)),
    )
    return q * q.conj(Conjugation.J), rhs


def _conj_ij_prod(t: _Terms, n: int) -> Sides:
    q = t.Q(n)
    return q * q.conj(Conjugation.IJ), _conj_ij_rhs(t, n)


def _norm_i(t: _Terms, n: int) -> Sides:
    return t.Q(n).norm_form(Conjugation.I), _conj_i_rhs(t, n)


def _norm_j(t: _Terms, n: int) -> Sides:
    F, c, k = t.F, t.c, t.k
    # printed without brackets: the k F(2n+3) term lands in the real part
    rhs = t.bc(
        (F(n) * F(n) - F(n + 1) * F(n + 1)) + (F(n + 2) * F(n + 2) - F(n + 3) * F(n + 3))
        + k * F(2 * n + 3),
        c(2) * F(n) * F(n + 1),
    )
    return t.Q(n).norm_form(Conjugation.J), rhs


def _norm_ij(t: _Terms, n: int) -> Sides:
    return t.Q(n).norm_form(Conjugation.IJ), _conj_ij_rhs(t, n)


def _recurrence(t: _Terms, n: int) -> Sides:
    return t.Q(n) + t.Q(n + 1).scale(t.k), t.Q(n + 2)


def _square(t: _Terms, n: int) -> Sides:
    F, c = t.F, t.c
    q = t.Q(n)
    rhs = t.bc(
        F(n) * F(n) - F(n + 1) * F(n + 1) - F(n + 2) * F(n + 2) - F(n + 3) * F(n + 3),
        c(2) * (F(n) * F(n + 1) - F(n + 2) * F(n + 3)),
        c(2) * (F(n) * F(n + 2) - F(n + 1) * F(n + 3)),
        c(2) * (F(n) * F(n + 3) + F(n + 1) * F(n + 2)),
    )
    return q * q, rhs


def _sq_sum(t: _Terms, n: int) -> Sides:
    F, c, k = t.F, t.c, t.k
    a, b = t.Q(n), t.Q(n + 1)
    rhs = t.Q(2 * n + 1) + t.bc(
        k * F(2 * n + 6) - F(2 * n + 3),
        F(2 * n + 2) - c(2) * F(2 * n + 6),
        F(2 * n + 3) - c(2) * F(2 * n + 5),
        c(3) * F(2 * n + 4),
    )
    return a * a + b * b, rhs


def _sq_diff(t: _Terms, n: int) -> Sides:
    F, c, k = t.F, t.c, t.k
    a, b = t.Q(n + 1), t.Q(n - 1)
    bracket = t.Q(2 * n) + t.bc(
        -F(2 * n + 2) + k * F(2 * n + 5),
        F(2 * n + 1) - c(2) * F(2 * n + 5),
        -F(2 * n + 2) - c(2) * k * F(2 * n + 3),
        c(3) * F(2 * n + 3),
    )
    return a * a - b * b, bracket.scale(k)


def _alt_comb_a(t: _Terms, n: int) -> Sides:
    F, L, c = t.F, t.L, t.c
    i, j, ij = t.unit("i"), t.unit("j"), t.unit("ij")
    lhs = t.Q(n) - i * t.Q(n + 1) + j * t.Q(n + 2) - ij * t.Q(n + 3)
    rhs = t.bc(F(n) + F(n + 2) - F(n + 4) - F(n + 6), y=c(2) * L(n + 3))
    return lhs, rhs


def _alt_comb_b(t: _Terms, n: int) -> Sides:
    F, c = t.F, t.c
    i, j, ij = t.unit("i"), t.unit("j"), t.unit("ij")
    lhs = t.Q(n) - i * t.Q(n + 1) - j * t.Q(n + 2) - ij * t.Q(n + 3)
    rhs = t.bc(
        F(n) + F(n + 2) + F(n + 4) - F(n + 6),
        c(2) * F(n + 5),
        c(2) * F(n + 4),
        c(-2) * F(n + 3),
    )
    return lhs, rhs


def _lucas_sum(t: _Terms, n: int) -> Sides:
    return t.Q(n + 1) + t.Q(n - 1), t.QL(n)


def _lucas_diff(t: _Terms, n: int) -> Sides:
    return t.Q(n + 2) - t.Q(n - 2), t.QL(n).scale(t.k)


def _honsberger(t: _Terms, n: int, m: int) -> Sides:
    F, c, k = t.F, t.c, t.k
    s = n + m
    lhs = t.Q(n) * t.Q(m) + t.Q(n + 1) * t.Q(m + 1)
    rhs = t.Q(s + 1) + t.bc(
        -F(s + 3) + k * F(s + 6),
        F(s + 2) - c(2) * F(s + 6),
        F(s + 3) - c(2) * F(s + 5),
        c(3) * F(s + 4),
    )
    return lhs, rhs


def _docagne(t: _Terms, n: int, m: int) -> Sides:
    lhs = t.Q(n) * t.Q(m + 1) - t.Q(n + 1) * t.Q(m)
    return lhs, t.cassini_bracket().scale(t.sign(m) * t.F(n - m))


def _sum_all(t: _Terms, n: int) -> Sides:
    lhs = t.total(t.Q(s) for s in range(1, n + 1)).scale(t.k)
    return lhs, t.Q(n + 1) + t.Q(n) - t.Q(1) - t.Q(0)


def _sum_odd(t: _Terms, n: int) -> Sides:
    lhs = t.total(t.Q(2 * s - 1) for s in range(1, n + 1)).scale(t.k)
    return lhs, t.Q(2 * n) - t.Q(0)


def _sum_even(t: _Terms, n: int) -> Sides:
    lhs = t.total(t.Q(2 * s) for s in range(1, n + 1)).scale(t.k)
    return lhs, t.Q(2 * n + 1) - t.Q(1)


def _cassini(t: _Terms, n: int) -> Sides:
    q = t.Q(n)
    lhs = t.Q(n - 1) * t.Q(n + 1) - q * q
    return lhs, t.cassini_bracket().scale(t.sign(n))


def _catalan(t: _Terms, n: int, r: int) -> Sides:
    p = n + r
    q = t.Q(p)
    lhs = t.Q(p - 1) * t.Q(p + 1) - q * q
    return lhs, t.cassini_bracket().scale(t.sign(n + r))


_CASSINI_BRACKET = "2(k^2+2) j + (k^3+2k) ij"

_SPECS = [
    IdentitySpec(identity=IdentityId.SEC2_MUL,
                 equation="Q(n)Q(m) = sum of F(n+a)F(m+b) e_a e_b, real part ending -F(n+3)F(m+3)",
                 params=("n", "m"), builder=_sec2_mul,
                 default={"n": (0, 5), "m": (0, 5)}),
    IdentitySpec(identity=IdentityId.QUAT_MUL,
                 equation="Q(n)Q(m) = sum of F(n+a)F(m+b) e_a e_b, real part ending +F(n+3)F(m+3)",
                 params=("n", "m"), builder=_quat_mul,
                 default={"n": (0, 8), "m": (0, 8)}),
    IdentitySpec(identity=IdentityId.CONJ_I_PROD,
                 equation="Q(n) conj_i(Q(n)) = F(2n+1) - F(2n+5) + 2F(2n+3) j",
                 params=("n",), builder=_conj_i_prod, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.CONJ_J_PROD,
                 equation="Q(n) conj_j(Q(n)) = F(n)^2 - F(n+1)^2 + F(n+2)^2 - F(n+3)^2"
                          " + 2(2F(n)F(n+1) + kF(2n+3)) i",
                 params=("n",), builder=_conj_j_prod, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.CONJ_IJ_PROD,
                 equation="Q(n) conj_ij(Q(n)) = F(2n+1) + F(2n+5) + 2(-1)^(n+1) k ij",
                 params=("n",), builder=_conj_ij_prod, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.NORM_I,
                 equation="norm_i(Q(n)) = F(2n+1) - F(2n+5) + 2F(2n+3) j",
                 params=("n",), builder=_norm_i, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.NORM_J,
                 equation="norm_j(Q(n)) = F(n)^2 - F(n+1)^2 + F(n+2)^2 - F(n+3)^2"
                          " + kF(2n+3) + 2F(n)F(n+1) i",
                 params=("n",), builder=_norm_j, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.NORM_IJ,
                 equation="norm_ij(Q(n)) = F(2n+1) + F(2n+5) + 2(-1)^(n+1) k ij",
                 params=("n",), builder=_norm_ij, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.RECURRENCE,
                 equation="Q(n) + k Q(n+1) = Q(n+2)",
                 params=("n",), builder=_recurrence, default={"n": (-10, 30)}),
    IdentitySpec(identity=IdentityId.SQUARE,
                 equation="Q(n)^2 = F(n)^2 - F(n+1)^2 - F(n+2)^2 - F(n+3)^2"
                          " + 2(F(n)F(n+1) - F(n+2)F(n+3)) i + 2(F(n)F(n+2) - F(n+1)F(n+3)) j"
                          " + 2(F(n)F(n+3) + F(n+1)F(n+2)) ij",
                 params=("n",), builder=_square, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.SQ_SUM,
                 equation="Q(n)^2 + Q(n+1)^2 = Q(2n+1) + kF(2n+6) - F(2n+3)"
                          " + (F(2n+2) - 2F(2n+6)) i + (F(2n+3) - 2F(2n+5)) j + 3F(2n+4) ij",
                 params=("n",), builder=_sq_sum, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.SQ_DIFF,
                 equation="Q(n+1)^2 - Q(n-1)^2 = k[Q(2n) - F(2n+2) + kF(2n+5)"
                          " + (F(2n+1) - 2F(2n+5)) i - (F(2n+2) + 2kF(2n+3)) j + 3F(2n+3) ij]",
                 params=("n",), builder=_sq_diff,
                 default={"n": (1, 25)}, extended={"n": (-10, 25)}),
    IdentitySpec(identity=IdentityId.ALT_COMB_A,
                 equation="Q(n) - iQ(n+1) + jQ(n+2) - ijQ(n+3) = F(n) + F(n+2) - F(n+4) - F(n+6) + 2L(n+3) j",
                 params=("n",), builder=_alt_comb_a, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.ALT_COMB_B,
                 equation="Q(n) - iQ(n+1) - jQ(n+2) - ijQ(n+3) = F(n) + F(n+2) + F(n+4) - F(n+6)"
                          " + 2F(n+5) i + 2F(n+4) j - 2F(n+3) ij",
                 params=("n",), builder=_alt_comb_b, default={"n": (0, 25)}),
    IdentitySpec(identity=IdentityId.LUCAS_SUM,
                 equation="Q(n+1) + Q(n-1) = QL(n)",
                 params=("n",), builder=_lucas_sum,
                 default={"n": (2, 25)}, extended={"n": (-10, 25)}),
    IdentitySpec(identity=IdentityId.LUCAS_DIFF,
                 equation="Q(n+2) - Q(n-2) = k QL(n)",
                 params=("n",), builder=_lucas_diff,
                 default={"n": (2, 25)}, extended={"n": (-10, 25)}),
    IdentitySpec(identity=IdentityId.HONSBERGER,
                 equation="Q(n)Q(m) + Q(n+1)Q(m+1) = Q(s+1) - F(s+3) + kF(s+6)"
                          " + (F(s+2) - 2F(s+6)) i + (F(s+3) - 2F(s+5)) j + 3F(s+4) ij, s = n+m",
                 params=("n", "m"), builder=_honsberger,
                 default={"n": (0, 12), "m": (0, 12)}, minimum={"n": 0, "m": 0}),
    IdentitySpec(identity=IdentityId.DOCAGNE,
                 equation=f"Q(n)Q(m+1) - Q(n+1)Q(m) = (-1)^m F(n-m) [{_CASSINI_BRACKET}], m <= n",
                 params=("n", "m"), builder=_docagne,
                 default={"n": (0, 15), "m": (0, 15)}, minimum={"n": 0, "m": 0},
                 point_filter=lambda p: p["m"] <= p["n"]),
    IdentitySpec(identity=IdentityId.SUM_ALL,
                 equation="k (Q(1) + ... + Q(n)) = Q(n+1) + Q(n) - Q(1) - Q(0)",
                 params=("n",), builder=_sum_all, default={"n": (1, 25)}, minimum={"n": 1}),
    IdentitySpec(identity=IdentityId.SUM_ODD,
                 equation="k (Q(1) + Q(3) + ... + Q(2n-1)) = Q(2n) - Q(0)",
                 params=("n",), builder=_sum_odd, default={"n": (1, 25)}, minimum={"n": 1}),
    IdentitySpec(identity=IdentityId.SUM_EVEN,
                 equation="k (Q(2) + Q(4) + ... + Q(2n)) = Q(2n+1) - Q(1)",
                 params=("n",), builder=_sum_even, default={"n": (1, 25)}, minimum={"n": 1}),
    IdentitySpec(identity=IdentityId.CASSINI,
                 equation=f"Q(n-1)Q(n+1) - Q(n)^2 = (-1)^n [{_CASSINI_BRACKET}]",
                 params=("n",), builder=_cassini,
                 default={"n": (1, 30)}, extended={"n": (-10, 30)}),
    IdentitySpec(identity=IdentityId.CATALAN,
                 equation=f"Q(n+r-1)Q(n+r+1) - Q(n+r)^2 = (-1)^(n+r) [{_CASSINI_BRACKET}]",
                 params=("n", "r"), builder=_catalan,
                 default={"n": (1, 20), "r": (0, 5)}),
]

REGISTRY: Dict[IdentityId, IdentitySpec] = {spec.identity: spec for spec in _SPECS}


def get_spec(identity) -> IdentitySpec:
    return REGISTRY[resolve_identity(identity)]


def resolve_identity(name) -> IdentityId:
    """Accept an IdentityId, its kebab name or its enum name"""
    if isinstance(name, IdentityId):
        return name
    text = str(name).strip().lower()
    for identity in REGISTRY:
        if text in (identity.value, identity.name.lower()):
            return identity
    raise ParameterDomainError(f"unknown identity: {name!r}")


def _grid_from(ranges: Mapping[str, Tuple[int, int]], ctx: KContext) -> ParamGrid:
    return ParamGrid(
        mode=ctx.label,
        **{axis: IndexRange(start=lo, stop=hi) for axis, (lo, hi) in ranges.items()},
    )


def default_grid(identity, ctx: KContext) -> ParamGrid:
    return _grid_from(get_spec(identity).default, ctx)


def extended_grid(identity, ctx: KContext) -> Optional[ParamGrid]:
    spec = get_spec(identity)
    return _grid_from(spec.extended, ctx) if spec.extended else None


def _check_params(spec: IdentitySpec, params: Mapping[str, int]) -> None:
    if set(params) != set(spec.params):
        raise ParameterDomainError(
            f"{spec.identity.value} takes parameters {list(spec.params)}, got {sorted(params)}"
        )
    for axis, low in spec.minimum.items():
        if params[axis] < low:
            raise ParameterDomainError(
                f"{spec.identity.value} requires {axis} >= {low}, got {params[axis]}"
            )
    if not spec.accepts(params):
        raise ParameterDomainError(f"{spec.identity.value} is not defined at {dict(params)}")


def _check_grid(spec: IdentitySpec, grid: ParamGrid, ctx: KContext) -> None:
    if grid.mode != ctx.label:
        raise ParameterDomainError(f"grid mode {grid.mode!r} does not match context k={ctx.label}")
    axes = grid.axes()
    if set(axes) != set(spec.params):
        raise ParameterDomainError(
            f"{spec.identity.value} takes parameters {list(spec.params)}, grid has {list(axes)}"
        )
    for axis, low in spec.minimum.items():
        if axes[axis].start < low:
            raise ParameterDomainError(
                f"{spec.identity.value} requires {axis} >= {low}, grid starts at {axes[axis].start}"
            )


def build_sides(identity, ctx: KContext, params: Mapping[str, int]) -> Sides:
    """Construct (LHS, RHS) of the identity at the given parameters"""
    spec = get_spec(identity)
    _check_params(spec, params)
    return spec.builder(_Terms(ctx), **params)


def discrepancy(identity, ctx: KContext, params: Mapping[str, int]) -> Bicomplex:
    """LHS - RHS; the zero bicomplex exactly when the identity holds at params"""
    lhs, rhs = build_sides(identity, ctx, params)
    return lhs - rhs


def verify(
    identity,
    ctx: KContext,
    grid: Optional[ParamGrid] = None,
    workers: int = 1,
) -> VerificationReport:
    """Evaluate both sides at every grid point and compare exactly"""
    spec = get_spec(identity)
    if grid is None:
        grid = default_grid(spec.identity, ctx)
    _check_grid(spec, grid, ctx)

    terms = _Terms(ctx)
    points = [p for p in grid.points() if spec.accepts(p)]
    if not points:
        ranges = ", ".join(f"{axis}={rng}" for axis, rng in grid.axes().items())
        raise ParameterDomainError(f"{spec.identity.value} has no admissible points on {ranges}")

    def evaluate(point: Dict[str, int]):
        lhs, rhs = spec.builder(terms, **point)
        return point, lhs, rhs

    logger.info(f"Verifying {spec.identity.value} on {len(points)} points, k={ctx.label}")

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(evaluate, points))
    else:
        results = map(evaluate, points)

    checked = passed = 0
    first_failure = None
    for point, lhs, rhs in results:
        checked += 1
        if lhs == rhs:
            passed += 1
            continue
        logger.debug(f"{spec.identity.value} fails at {point}")
        if first_failure is None:
            first_failure = FailureRecord(params=point, lhs=lhs, rhs=rhs, discrepancy=lhs - rhs)

    logger.info(f"{spec.identity.value}: {passed}/{checked} passed")
    return VerificationReport(
        identity=spec.identity,
        grid=grid,
        checked=checked,
        passed=passed,
        first_failure=first_failure,
    )


def audit(
    ctx: KContext,
    grids: Optional[Mapping[IdentityId, ParamGrid]] = None,
    extended: bool = False,
    workers: int = 1,
) -> List[VerificationReport]:
    """Verify every registered identity, in registry order"""
    grids = grids or {}
    reports = []
    for spec in REGISTRY.values():
        grid = grids.get(spec.identity) or default_grid(spec.identity, ctx)
        reports.append(verify(spec.identity, ctx, grid, workers=workers))
        if extended and spec.extended:
            reports.append(verify(spec.identity, ctx, extended_grid(spec.identity, ctx), workers=workers))
    failing = [r.identity.value for r in reports if not r.holds]
    logger.info(f"Audit finished: {len(reports)} reports, failing: {failing or 'none'}")
    return reports
