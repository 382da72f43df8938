"""Compare computed Fourier forms with the published closed forms.

Two trigonometric quasi-polynomials agree as functions of a real variable
only if their coefficients agree term by term, so sampling non-integer
points checks the coefficients, not just the integer values.
"""

import random

import mpmath
import pytest

from hilbpoly.quasipoly import hilbert_quasipolynomial, to_fourier
from hilbpoly.slmod import hilbert_values

from reference_forms import DISPLAYS, i5

DPS = 50
TOL = mpmath.mpf(10) ** -40


@pytest.mark.parametrize("d", list(DISPLAYS), ids=str)
def test_integer_values_match_counting(d):
    values = hilbert_values(d, 121)
    with mpmath.workdps(DPS):
        assert all(abs(DISPLAYS[d](n) - values[n]) < TOL for n in range(121))


@pytest.mark.parametrize("d", list(DISPLAYS), ids=str)
def test_fourier_coefficients_match(d):
    ff = to_fourier(hilbert_quasipolynomial(d))
    rng = random.Random(hash(d) & 0xFFFF)
    with mpmath.workdps(DPS):
        for _ in range(25):
            x = mpmath.mpf(rng.uniform(0, 40))
            assert abs(ff.evaluate_numeric(x, DPS) - DISPLAYS[d](x)) < TOL


def test_quintic_literal_form_is_off_by_a_factor_n():
    values = hilbert_values(5, 20)
    with mpmath.workdps(DPS):
        assert any(abs(i5(n, restore_n=False) - values[n]) > 0.1 for n in range(20))
