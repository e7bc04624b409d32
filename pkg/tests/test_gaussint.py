"""Exact Gaussian-integer arithmetic."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circdet import DivisionNotExact, GaussInt

parts = st.integers(min_value=-10 ** 6, max_value=10 ** 6)
gauss = st.builds(GaussInt, parts, parts)
big_gauss = st.builds(GaussInt, st.integers(), st.integers())


def test_addition_examples():
    assert GaussInt(1, 2) + GaussInt(3, -1) == GaussInt(4, 1)
    assert GaussInt(0, 0) + GaussInt(5, 7) == GaussInt(5, 7)
    assert GaussInt(2, 3) + GaussInt(-2, -3) == GaussInt(0, 0)


def test_multiplication_examples():
    assert GaussInt(1, 1) * GaussInt(1, 1) == GaussInt(0, 2)
    assert GaussInt(1, 1) * GaussInt(1, -1) == GaussInt(2, 0)
    assert GaussInt(0, 1) * GaussInt(0, 1) == GaussInt(-1, 0)


def test_power_examples():
    assert GaussInt(0, 2) ** 2 == GaussInt(-4, 0)
    assert GaussInt(0, 2) ** 0 == GaussInt(1, 0)
    assert GaussInt(1, 1) ** 4 == GaussInt(-4, 0)  # ((1+i)^2)^2 = (2i)^2


def test_power_rejects_negative_exponent():
    with pytest.raises(ValueError):
        GaussInt(1, 1) ** -1


def test_power_rejects_non_integer_exponent():
    with pytest.raises(TypeError):
        GaussInt(1, 1) ** 2.0


def test_conjugation_examples():
    assert GaussInt(3, 4).conjugate() == GaussInt(3, -4)
    assert GaussInt(5, 0).conjugate() == GaussInt(5, 0)
    a = GaussInt(-2, 7)
    assert a.conjugate().conjugate() == a


def test_exact_division_examples():
    assert GaussInt(-4, 0).exact_div(GaussInt(0, 2)) == GaussInt(0, 2)
    assert GaussInt(10, 0).exact_div(GaussInt(1, 2)) == GaussInt(2, -4)
    with pytest.raises(DivisionNotExact):
        GaussInt(3, 0).exact_div(GaussInt(2, 0))
    with pytest.raises(ZeroDivisionError):
        GaussInt(3, 0).exact_div(GaussInt(0, 0))


def test_int_mixing():
    assert 3 * GaussInt(0, 1) == GaussInt(0, 3)
    assert GaussInt(1, 1) + 1 == GaussInt(2, 1)
    assert 1 - GaussInt(0, 1) == GaussInt(1, -1)
    assert GaussInt(4, 2).exact_div(2) == GaussInt(2, 1)
    assert GaussInt(2, 0) == 2


def test_str_rendering():
    assert str(GaussInt(7, -3)) == "7-3i"
    assert str(GaussInt(-4, 0)) == "-4+0i"
    assert str(GaussInt(0, 2)) == "0+2i"


def test_json_round_trip_unbounded():
    g = GaussInt(-(10 ** 50) - 7, 10 ** 42)
    obj = g.to_json()
    assert obj == {"re": str(g.re), "im": str(g.im)}
    assert GaussInt.from_json(obj) == g


@given(gauss, gauss, gauss)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(gauss, gauss)
def test_conjugation_is_ring_homomorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@given(st.builds(GaussInt, st.integers(-50, 50), st.integers(-50, 50)),
       st.integers(0, 64), st.integers(0, 64))
def test_power_splits_over_addition(a, e1, e2):
    assert a ** (e1 + e2) == (a ** e1) * (a ** e2)


@given(big_gauss, big_gauss)
def test_exact_div_inverts_multiplication(a, b):
    if not b:
        b = GaussInt(1, 1)
    assert (a * b).exact_div(b) == a


def test_norm_and_bool():
    assert GaussInt(3, 4).norm() == 25
    assert not GaussInt(0, 0)
    assert GaussInt(0, 1)
