import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xxcorr import kernels

needs_compiled = pytest.mark.skipif(kernels._compiled is None, reason="compiled extension not built")


def brute_cross(a, b, L):
    vals = [math.sin(math.pi * (x - y) / (2 * L)) for x in a for y in b]
    return math.fsum(math.log(abs(v)) for v in vals), int(np.prod(np.sign(vals))) if vals else 1


def brute_triangle(a, L):
    vals = [math.sin(math.pi * (a[i] - a[j]) / (2 * L)) for i in range(len(a)) for j in range(i + 1, len(a))]
    return math.fsum(math.log(abs(v)) for v in vals), int(np.prod(np.sign(vals))) if vals else 1


@pytest.mark.parametrize("backend", ["numpy", pytest.param("cython", marks=needs_compiled)])
def test_empty_products(backend):
    assert kernels.sine_cross_logsum([], [1, 3], 8, backend) == (0.0, 1)
    assert kernels.sine_triangle_logsum([5], 8, backend) == (0.0, 1)


@pytest.mark.parametrize("backend", ["numpy", pytest.param("cython", marks=needs_compiled)])
def test_zero_factor_raises(backend):
    with pytest.raises(ZeroDivisionError):
        kernels.sine_cross_logsum([2], [2 + 16], 8, backend)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.sine_triangle_logsum([1, 3], 8, "fortran")


@st.composite
def index_sets(draw):
    L = draw(st.sampled_from([8, 16, 64, 256]))
    evens = draw(st.lists(st.integers(-L, L).map(lambda v: 2 * v), unique=True, max_size=12))
    odds = draw(st.lists(st.integers(-L, L).map(lambda v: 2 * v + 1), unique=True, max_size=12))
    return L, evens, odds


@settings(max_examples=60, deadline=None)
@given(index_sets())
def test_numpy_backend_matches_brute_force(case):
    L, a, b = case
    a = [v for v in a if all((v - w) % (2 * L) for w in a if w != v)]
    got = kernels.sine_cross_logsum(a, b, L, "numpy")
    ref = brute_cross(a, b, L)
    assert got[1] == ref[1]
    assert got[0] == pytest.approx(ref[0], abs=1e-11)
    got = kernels.sine_triangle_logsum(a, L, "numpy")
    ref = brute_triangle(a, L)
    assert got[1] == ref[1]
    assert got[0] == pytest.approx(ref[0], abs=1e-11)


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(index_sets())
def test_backends_agree(case):
    L, a, b = case
    a = [v for v in a if all((v - w) % (2 * L) for w in a if w != v)]
    for fn, args in ((kernels.sine_cross_logsum, (a, b, L)), (kernels.sine_triangle_logsum, (a, L))):
        x = fn(*args, backend="numpy")
        y = fn(*args, backend="cython")
        assert x[1] == y[1]
        assert x[0] == pytest.approx(y[0], abs=1e-11)
