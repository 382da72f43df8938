"""Hilbert quasi-polynomials of algebras of joint SL2-invariants of binary forms.

Typical use::

    >>> from hilbpoly import hilbert_quasipolynomial, to_fourier, render
    >>> qp = hilbert_quasipolynomial((2,))
    >>> render(to_fourier(qp), "fourier")
    '1/2 + 1/2*cos(Pi*n)'
"""

__version__ = "0.1.0"

from .exact import Poly, SeriesPrefix, poly_divrem, poly_gcd, poly_mul, series_of_ratfun, solve_linear
from .slmod import (
    DegreeVector,
    build_weight_table,
    gaussian_binomial,
    hilbert_value,
    hilbert_value_qbin,
    hilbert_values,
    omega,
)
from .series_recon import (
    CyclotomicFactorization,
    RationalFunction,
    cyclotomic,
    factor_denominator,
    period_and_degree,
    reconstruct,
)
from .cyclofield import CyclotomicReal
from .quasipoly import (
    FourierForm,
    QuasiPolynomial,
    evaluate,
    fit,
    hilbert_quasipolynomial,
    render,
    to_fourier,
)

__all__ = [
    "Poly", "SeriesPrefix", "poly_mul", "poly_divrem", "poly_gcd", "series_of_ratfun", "solve_linear",
    "DegreeVector", "build_weight_table", "omega", "hilbert_value", "hilbert_values",
    "gaussian_binomial", "hilbert_value_qbin",
    "RationalFunction", "CyclotomicFactorization", "reconstruct", "cyclotomic",
    "factor_denominator", "period_and_degree",
    "CyclotomicReal", "QuasiPolynomial", "FourierForm", "fit", "evaluate", "to_fourier", "render",
    "hilbert_quasipolynomial",
]
