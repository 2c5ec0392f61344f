#!/usr/bin/env python3
"""
Tests for exact scalar arithmetic: integer and polynomial-in-k modes.
"""

import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add repository root to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.ring import (
    ModeMismatchError,
    Poly,
    ScalarMode,
    ensure_same_mode,
    mode_of,
    poly_add,
    poly_eval,
    poly_mul,
    poly_sub,
    render_scalar,
    scalar_eval,
)

K = Poly.k()
ONE = Poly.constant(1)

polys = st.lists(st.integers(min_value=-50, max_value=50), max_size=6).map(Poly)


def test_poly_is_canonical():
    """Trailing zeros are stripped and the zero polynomial has no degree"""
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2), "Trailing zeros should be stripped"
    assert Poly([0, 0]) == Poly(), "All-zero coefficients should give the zero polynomial"
    assert Poly().degree is None
    assert Poly().is_zero()
    assert Poly.monomial(3, 4).degree == 4


@pytest.mark.parametrize("bad", [1.7, 2.0, "3", None])
def test_poly_rejects_non_integer_coefficients(bad):
    with pytest.raises(TypeError):
        Poly([1, bad])
    with pytest.raises(TypeError):
        Poly.constant(bad)


def test_poly_add_examples():
    assert poly_add(K * K + ONE, Poly.constant(-1)) == K * K
    assert poly_add(Poly(), K * K * K + Poly.constant(2) * K) == Poly([0, 2, 0, 1])
    assert poly_add(K, K * K + ONE) == Poly([1, 1, 1])


def test_poly_sub_examples():
    assert poly_sub(K * K + ONE, K * K + ONE) == Poly()
    assert poly_sub(Poly([0, 2, 0, 1]), K) == Poly([0, 1, 0, 1])
    assert poly_sub(Poly(), K) == Poly([0, -1])


def test_poly_mul_examples():
    assert poly_mul(K, K * K + ONE) == Poly([0, 1, 0, 1])
    assert poly_mul(K * K + ONE, K * K + ONE) == Poly([1, 0, 2, 0, 1])
    assert poly_mul(Poly(), Poly([1, 0, 3, 0, 1])) == Poly()


def test_poly_eval_examples():
    assert poly_eval(Poly([0, 2, 0, 1]), 1) == 3
    assert poly_eval(Poly(), 7) == 0
    assert poly_eval(Poly([1, 0, 3, 0, 1]), 2) == 29


@pytest.mark.parametrize("poly, text", [
    (Poly(), "0"),
    (Poly([0, 2, 0, 1]), "k^3 + 2*k"),
    (Poly([0, -1]), "-k"),
    (Poly([1, 0, 1]), "k^2 + 1"),
    (Poly([-3, 0, -2]), "-2*k^2 - 3"),
    (Poly.constant(-7), "-7"),
])
def test_poly_rendering(poly, text):
    assert str(poly) == text, f"{poly!r} should render as {text!r}"
    assert render_scalar(poly) == text


def test_poly_is_immutable():
    with pytest.raises(AttributeError):
        K._coeffs = (1,)


def test_mode_mismatch_is_rejected():
    """Integer and polynomial scalars never mix implicitly"""
    with pytest.raises(ModeMismatchError):
        K + 1
    with pytest.raises(ModeMismatchError):
        2 * K
    with pytest.raises(ModeMismatchError):
        ensure_same_mode(1, K)
    assert isinstance(ModeMismatchError("x"), ValueError)


def test_modes():
    assert mode_of(5) is ScalarMode.INT
    assert mode_of(K) is ScalarMode.SYMK
    with pytest.raises(TypeError):
        mode_of(True)
    assert ScalarMode.INT.const(3) == 3
    assert ScalarMode.SYMK.const(3) == Poly([3])
    assert ScalarMode.SYMK.zero == Poly()
    assert ScalarMode.INT.one == 1
    assert scalar_eval(12, 99) == 12
    assert scalar_eval(K * K, 3) == 9


@settings(max_examples=1000)
@given(polys, polys, polys)
def test_poly_ring_axioms(p, q, s):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + s == p + (q + s)
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s
    assert p - p == Poly()


@settings(max_examples=1000)
@given(polys, polys, st.integers(min_value=-20, max_value=20))
def test_eval_is_a_ring_homomorphism(p, q, x):
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (-p).evaluate(x) == -p.evaluate(x)


def main():
    """Run ring tests directly"""
    return pytest.main([__file__, "-q"])


if __name__ == "__main__":
    sys.exit(main())
