#!/usr/bin/env python3
"""
Tests for k-Fibonacci and k-Lucas sequences, fast doubling and Binet forms.
"""

import math
import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add repository root to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.kfib import (
    KContext,
    binet_fib_float,
    binet_lucas_float,
    fib,
    fib_pair_fastdouble,
    lucas,
)
from src.ring import Poly, ScalarMode

SYM = KContext.symbolic()


def test_symbolic_fibonacci():
    """Symbolic terms are the k-Fibonacci polynomials"""
    assert fib(SYM, 0) == Poly()
    assert fib(SYM, 1) == Poly([1])
    assert fib(SYM, 3) == Poly([1, 0, 1])
    assert fib(SYM, 4) == Poly([0, 2, 0, 1])
    assert fib(SYM, 5) == Poly([1, 0, 3, 0, 1])
    assert fib(SYM, -1) == Poly([1])
    assert fib(SYM, -2) == Poly([0, -1])
    print("✅ Symbolic Fibonacci polynomials passed")


def test_integer_fibonacci():
    ctx = KContext.integer(1)
    assert [fib(ctx, n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    pell = KContext.integer(2)
    assert [fib(pell, n) for n in range(7)] == [0, 1, 2, 5, 12, 29, 70]


def test_negative_indices():
    """F(-n) = (-1)^(n+1) F(n) and L(-n) = (-1)^n L(n)"""
    for k in (1, 2, 3):
        ctx = KContext.integer(k)
        for n in range(0, 25):
            assert fib(ctx, -n) == (-1) ** (n + 1) * fib(ctx, n), f"F(-{n}) wrong at k={k}"
            assert lucas(ctx, -n) == (-1) ** n * lucas(ctx, n), f"L(-{n}) wrong at k={k}"


def test_lucas():
    assert lucas(SYM, 0) == Poly([2])
    assert lucas(SYM, 1) == Poly([0, 1])
    assert lucas(SYM, 2) == Poly([2, 0, 1])
    assert lucas(SYM, 3) == Poly([0, 3, 0, 1])
    ctx = KContext.integer(1)
    assert [lucas(ctx, n) for n in range(6)] == [2, 1, 3, 4, 7, 11]
    assert [lucas(KContext.integer(2), n) for n in range(4)] == [2, 2, 6, 14]


def test_lucas_from_fibonacci():
    """L(n) = F(n-1) + F(n+1) over the signed range"""
    for n in range(-15, 30):
        assert lucas(SYM, n) == fib(SYM, n - 1) + fib(SYM, n + 1)


def _sign(n):
    return SYM.const(1 if n % 2 == 0 else -1)


@pytest.mark.parametrize("ctx", [SYM, KContext.integer(1), KContext.integer(3)], ids=lambda c: c.label)
def test_recurrence_closure(ctx):
    k = ctx.k
    for n in range(-50, 51):
        assert ctx.fib(n + 1) == k * ctx.fib(n) + ctx.fib(n - 1), f"fib recurrence at n={n}"
        assert ctx.lucas(n + 1) == k * ctx.lucas(n) + ctx.lucas(n - 1), f"lucas recurrence at n={n}"


def test_squares_sum():
    for n in range(0, 31):
        a, b = fib(SYM, n), fib(SYM, n + 1)
        assert a * a + b * b == fib(SYM, 2 * n + 1), f"F(n)^2 + F(n+1)^2 at n={n}"


def test_convolution():
    for n in range(0, 16):
        for m in range(0, 16):
            lhs = fib(SYM, n) * fib(SYM, m) + fib(SYM, n + 1) * fib(SYM, m + 1)
            assert lhs == fib(SYM, n + m + 1), f"convolution at n={n}, m={m}"


def test_index_shift_catalan_family():
    """Products of terms a fixed distance apart differ by (-1)^n times a small polynomial"""
    F = lambda i: fib(SYM, i)
    k, one = SYM.k, SYM.const(1)
    for n in range(1, 31):
        s = _sign(n)
        assert F(n - 1) * F(n + 1) - F(n) * F(n) == s, f"shift 1 at n={n}"
        assert F(n - 1) * F(n + 2) - F(n) * F(n + 1) == s * k, f"shift 1,2 at n={n}"
        assert F(n - 1) * F(n + 3) - F(n) * F(n + 2) == s * (k * k + one), f"shift 1,3 at n={n}"
        assert F(n + 1) * F(n + 3) - F(n) * F(n + 4) == s * (k * k + one), f"shift 0,4 at n={n}"
        assert F(n - 1) * F(n + 4) - F(n) * F(n + 3) == s * (k * k * k + SYM.const(2) * k), f"shift 1,4 at n={n}"


def test_scalar_sum_formulas():
    """k-cleared sums of all, odd- and even-indexed terms"""
    k, one = SYM.k, SYM.const(1)
    total = odd = even = Poly()
    for n in range(1, 31):
        total = total + fib(SYM, n)
        odd = odd + fib(SYM, 2 * n - 1)
        even = even + fib(SYM, 2 * n)
        assert k * total == fib(SYM, n + 1) + fib(SYM, n) - one, f"sum of F(1..{n})"
        assert k * odd == fib(SYM, 2 * n), f"sum of odd terms up to n={n}"
        assert k * even == fib(SYM, 2 * n + 1) - one, f"sum of even terms up to n={n}"


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_symbolic_specializes_to_integer(k):
    ctx = KContext.integer(k)
    for n in range(-10, 31):
        assert fib(SYM, n).evaluate(k) == fib(ctx, n)
        assert lucas(SYM, n).evaluate(k) == lucas(ctx, n)


def test_fast_doubling():
    assert fib_pair_fastdouble(1, 0) == (0, 1)
    assert fib_pair_fastdouble(1, 10) == (55, 89)
    ctx = KContext.integer(3)
    assert fib_pair_fastdouble(3, 64) == (fib(ctx, 64), fib(ctx, 65))
    print("✅ Fast doubling passed")


@settings(max_examples=1000)
@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=300))
def test_fast_doubling_matches_recurrence(k, n):
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, k * cur + prev
    assert fib_pair_fastdouble(k, n) == (prev, cur)


FAST_DOUBLING_INDICES = sorted(
    set(range(0, 1001)) | {2 ** t + d for t in range(14) for d in (-1, 0, 1)}
)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_fast_doubling_powers_of_two(k):
    """Fast doubling agrees with the iterative recurrence around every power of two"""
    top = FAST_DOUBLING_INDICES[-1] + 1
    terms = [0, 1]
    while len(terms) <= top:
        terms.append(k * terms[-1] + terms[-2])
    for n in FAST_DOUBLING_INDICES:
        assert fib_pair_fastdouble(k, n) == (terms[n], terms[n + 1]), f"k={k}, n={n}"


def test_fast_doubling_large_index():
    value, _ = fib_pair_fastdouble(1, 1000)
    assert len(str(value)) == 209, "F(1000) has 209 decimal digits"


def test_fast_doubling_domain():
    with pytest.raises(ValueError):
        fib_pair_fastdouble(0, 5)
    with pytest.raises(ValueError):
        fib_pair_fastdouble(1, -1)


def test_binet_forms():
    assert math.isclose(binet_fib_float(1, 10), 55, rel_tol=1e-9)
    assert math.isclose(binet_fib_float(2, 5), 29, rel_tol=1e-9)
    assert abs(binet_fib_float(1, 0)) < 1e-12
    assert math.isclose(binet_lucas_float(1, 5), 11, rel_tol=1e-9)
    assert math.isclose(binet_lucas_float(2, 3), 14, rel_tol=1e-9)
    with pytest.raises(ValueError):
        binet_fib_float(1, -1)
    with pytest.raises(ValueError):
        binet_fib_float(0, 3)


def test_binet_overflow_is_a_value_error():
    with pytest.raises(ValueError, match="overflows"):
        binet_fib_float(1, 1500)
    with pytest.raises(ValueError, match="overflows"):
        binet_lucas_float(5, 1000)


def test_context_construction():
    assert SYM.mode is ScalarMode.SYMK and SYM.label == "sym"
    ctx = KContext.parse("3")
    assert ctx.mode is ScalarMode.INT and ctx.k == 3 and ctx.label == "3"
    assert KContext.parse(" SYM ").mode is ScalarMode.SYMK
    for bad in (0, -2, True, 1.5):
        with pytest.raises(ValueError):
            KContext(bad)
    with pytest.raises(ValueError):
        KContext.parse("abc")


def test_cache_is_transparent():
    cached = KContext.integer(2, enable_cache=True)
    uncached = KContext.integer(2, enable_cache=False)
    for n in range(-20, 40):
        assert cached.fib(n) == uncached.fib(n)
        assert cached.lucas(n) == uncached.lucas(n)
    info = cached.cache_info()
    assert info["fib"]["forward_terms"] == 40
    assert uncached.cache_info()["fib"]["forward_terms"] == 2


def main():
    """Run sequence tests directly"""
    return pytest.main([__file__, "-q"])


if __name__ == "__main__":
    sys.exit(main())
