"""Rebuild the Poincare series from Hilbert values and factor its denominator.

The series is recovered as the generating function of the shortest linear
recurrence (Berlekamp-Massey over Q) and then checked against fresh
Hilbert values. Roots of the denominator are never computed numerically:
they are recorded as cyclotomic orders with multiplicities.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Sequence

from .exact import Poly, exact_div, poly_divrem, poly_gcd, series_of_ratfun
from .slmod import as_degree_vector, hilbert_values

log = logging.getLogger(__name__)

DEFAULT_GUARD = 4
MAX_TERMS = 4096


class ReconstructionError(RuntimeError):
    pass


class FactorizationError(RuntimeError):
    pass


@dataclass(frozen=True)
class RationalFunction:
    """Coprime ``num/den`` with ``den(0) == 1``."""

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero():
            raise ValueError("zero denominator")
        if self.den[0] != 1:
            raise ValueError("denominator must be normalized to den(0) = 1")
        if self.num.is_zero():
            if self.den != 1:
                raise ValueError("zero function must be stored as 0/1")
        elif poly_gcd(self.num, self.den).degree > 0:
            raise ValueError("numerator and denominator are not coprime")

    @classmethod
    def normalized(cls, num: Poly, den: Poly) -> "RationalFunction":
        if num.is_zero():
            return cls(Poly(), Poly([1]))
        g = poly_gcd(num, den)
        num, den = exact_div(num, g), exact_div(den, g)
        c = den[0]
        if c == 0:
            raise ValueError("rational function has a pole at z = 0")
        return cls(Poly(x / c for x in num.coeffs), Poly(x / c for x in den.coeffs))

    def series(self, order: int):
        return series_of_ratfun(self.num, self.den, order)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


def berlekamp_massey(seq: Sequence) -> tuple[Poly, int]:
    """Connection polynomial ``C`` (``C(0) = 1``) of the shortest recurrence.

    ``sum_k C[k] * seq[n-k] == 0`` for every ``n >= L`` where ``L`` is the
    linear complexity; ``L`` may exceed ``deg C``.
    """
    s = [Fraction(x) for x in seq]
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        disc = s[n]
        for i in range(1, L + 1):
            if i < len(C):
                disc += C[i] * s[n - i]
        if disc == 0:
            m += 1
            continue
        coef = disc / b
        T = C[:]
        need = len(B) + m
        if len(C) < need:
            C = C + [Fraction(0)] * (need - len(C))
        for i, x in enumerate(B):
            C[i + m] -= coef * x
        if 2 * L <= n:
            L = n + 1 - L
            B, b, m = T, disc, 1
        else:
            m += 1
    return Poly(C), L


def ratfun_from_sequence(seq: Sequence) -> tuple[RationalFunction, int]:
    """Rational generating function of ``seq`` and its linear complexity."""
    C, L = berlekamp_massey(seq)
    S = Poly(seq)
    num = (S * C).truncate(L)
    return RationalFunction.normalized(num, C), L


def default_term_budget(d) -> int:
    return 4 * as_degree_vector(d).dimension ** 2


def reconstruct(d, term_budget: int | None = None, *, guard: int = DEFAULT_GUARD,
                max_terms: int = MAX_TERMS) -> RationalFunction:
    """Poincare series of the invariant algebra of ``V_d`` as ``num/den``."""
    d = as_degree_vector(d)
    T = default_term_budget(d) if term_budget is None else term_budget
    if T < 4:
        raise ValueError("term_budget must be at least 4")
    last = None
    while T <= max_terms:
        values = hilbert_values(d, T + guard)
        rf, L = ratfun_from_sequence(values[:T])
        last = (rf.num.degree, rf.den.degree, L)
        # 2L + guard terms pin the recurrence; the rest verify it.
        if 2 * L + guard <= T and list(rf.series(T + guard)) == values:
            return rf
        log.debug("reconstruction of %s with %d terms unstable (deg num=%s, deg den=%s)",
                  d, T, rf.num.degree, rf.den.degree)
        T *= 2
    raise ReconstructionError(
        f"no stable rational generating function for d={d} within {max_terms} terms; "
        f"last attempt had deg num={last[0]}, deg den={last[1]}, complexity={last[2]}"
    )


# --- cyclotomic polynomials --------------------------------------------------

def divisors(m: int) -> list[int]:
    small, large = [], []
    for k in range(1, isqrt(m) + 1):
        if m % k == 0:
            small.append(k)
            if k != m // k:
                large.append(m // k)
    return small + large[::-1]


def totient(m: int) -> int:
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def lcm(*ms: int) -> int:
    out = 1
    for m in ms:
        out = out * m // gcd(out, m)
    return out


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> Poly:
    """``Phi_m = (z^m - 1) / prod_{k | m, k < m} Phi_k``."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    p = Poly.monomial(m) - 1
    for k in divisors(m)[:-1]:
        p = exact_div(p, cyclotomic(k))
    return p


@dataclass(frozen=True)
class CyclotomicFactorization:
    """``den == unit * prod Phi_m ** mult`` over ``factors = ((m, mult), ...)``."""

    factors: tuple[tuple[int, int], ...]
    unit: Fraction = Fraction(1)

    def __post_init__(self):
        orders = [m for m, _ in self.factors]
        if orders != sorted(set(orders)):
            raise ValueError("cyclotomic orders must be strictly increasing")
        if any(k < 1 for _, k in self.factors):
            raise ValueError("multiplicities must be positive")

    def multiplicity(self, m: int) -> int:
        return dict(self.factors).get(m, 0)

    def expand(self) -> Poly:
        p = Poly([self.unit])
        for m, k in self.factors:
            p = p * cyclotomic(m) ** k
        return p

    def root_count(self) -> int:
        return sum(totient(m) * k for m, k in self.factors)

    def to_json(self) -> dict:
        return {"unit": str(self.unit), "factors": [[m, k] for m, k in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicFactorization":
        return cls(tuple((int(m), int(k)) for m, k in data["factors"]), Fraction(data["unit"]))

    def __str__(self):
        if not self.factors:
            return str(self.unit)
        body = " * ".join(f"Phi{m}" if k == 1 else f"Phi{m}^{k}" for m, k in self.factors)
        if self.unit == 1:
            return body
        if self.unit == -1:
            return "-" + body
        return f"{self.unit} * {body}"


def factor_denominator(rf: RationalFunction) -> CyclotomicFactorization:
    """Trial-divide the denominator by cyclotomic polynomials.

    Every ``m`` with ``phi(m) <= deg`` satisfies ``m <= 2 deg^2`` because
    ``phi(m) >= sqrt(m/2)``.
    """
    rest = rf.den
    deg = rest.degree
    factors = []
    if deg > 0:
        for m in range(1, 2 * deg * deg + 1):
            if rest.degree <= 0:
                break
            if totient(m) > rest.degree:
                continue
            phi = cyclotomic(m)
            k = 0
            while rest.degree >= phi.degree:
                q, r = poly_divrem(rest, phi)
                if not r.is_zero():
                    break
                rest, k = q, k + 1
            if k:
                factors.append((m, k))
    if rest.degree != 0:
        raise FactorizationError(
            f"denominator has a factor {rest} that is not a product of cyclotomic polynomials"
        )
    return CyclotomicFactorization(tuple(factors), rest[0])


def period_and_degree(fac: CyclotomicFactorization) -> tuple[int, int | None, int]:
    """``(period, degree_bound, pole_order_at_one)``.

    ``degree_bound`` is ``None`` when there are no poles, i.e. the
    quasi-polynomial is identically zero.
    """
    if not fac.factors:
        return 1, None, 0
    period = lcm(*(m for m, _ in fac.factors))
    degree_bound = max(k for _, k in fac.factors) - 1
    return period, degree_bound, fac.multiplicity(1)
