from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, strategies as st

from hilbpoly.cyclofield import (
    CyclotomicElement,
    CyclotomicReal,
    cos_root,
    field,
    sin_root,
    sqrt_int,
)


@pytest.mark.parametrize("order", [3, 4, 5, 8, 12, 20, 60])
def test_cos_sin_numeric(order):
    with mpmath.workdps(50):
        for k in range(order):
            angle = 2 * mpmath.pi * k / order
            assert abs(cos_root(order, k).to_mpf(50) - mpmath.cos(angle)) < mpmath.mpf(10) ** -45
            assert abs(sin_root(order, k).to_mpf(50) - mpmath.sin(angle)) < mpmath.mpf(10) ** -45


@pytest.mark.parametrize("order", [5, 12, 60])
def test_pythagoras(order):
    for k in range(order):
        c, s = cos_root(order, k), sin_root(order, k)
        assert c * c + s * s == 1


@pytest.mark.parametrize("m", [2, 3, 5, 6, 7, 10, 12, 15])
def test_sqrt_int(m):
    r = sqrt_int(m)
    assert r * r == m
    assert r.sign() == 1


def test_sqrt_form_detection():
    x = sqrt_int(3) * F(-1, 9)
    assert x.sqrt_form() == (-1, F(1, 9), 3)
    assert (x * x).to_rational() == F(1, 27)
    assert cos_root(5, 1).sqrt_form() is None


def test_cos_basis_of_sqrt5():
    M, coords = sqrt_int(5).cos_basis()
    assert M == 5
    assert coords == [1, 4]  # sqrt 5 = 1 + 4 cos(2 pi / 5)


def test_conductor():
    assert sqrt_int(3).conductor() == 12
    assert sqrt_int(5).embed(60).conductor() == 5
    assert CyclotomicReal.rational(F(2, 3), 60).conductor() == 1


def test_real_check():
    with pytest.raises(ValueError):
        CyclotomicReal(field(4), [0, 1])  # i


@given(st.integers(0, 59), st.integers(0, 59))
def test_angle_addition(a, b):
    lhs = cos_root(60, a + b)
    rhs = cos_root(60, a) * cos_root(60, b) - sin_root(60, a) * sin_root(60, b)
    assert lhs == rhs


@given(st.lists(st.fractions(max_denominator=9, min_value=-3, max_value=3), min_size=4, max_size=4))
def test_multiplication_matches_numeric(coords):
    x = CyclotomicElement(field(5), coords)
    y = CyclotomicElement.root_of_unity(12, 5)
    with mpmath.workdps(40):
        assert abs((x * y).to_mpc(40) - x.to_mpc(40) * y.to_mpc(40)) < mpmath.mpf(10) ** -30
