"""Exact arithmetic in cyclotomic fields ``Q(zeta_N)``.

Elements are coordinate vectors in the power basis ``1, zeta, ...,
zeta^(phi(N)-1)``. Values from different fields are embedded into the
field of the lcm of their orders before combining.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from .exact import as_rational, solve_linear
from .series_recon import cyclotomic, divisors, lcm


class CyclotomicField:
    def __init__(self, order: int):
        if order < 1:
            raise ValueError("field order must be positive")
        self.order = order
        phi = cyclotomic(order)
        self.modulus = phi
        self.degree = phi.degree
        f = self.degree
        low = [-c for c in phi.coeffs[:f]]  # zeta^f = sum low[i] zeta^i
        powers = []
        cur = [Fraction(0)] * f
        cur[0] = Fraction(1)
        for _ in range(order):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                cur = [c + top * l for c, l in zip(cur, low)]
        self._powers = powers

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def power(self, k: int) -> tuple[Fraction, ...]:
        """Coordinates of ``zeta^k``."""
        return self._powers[k % self.order]

    def reduce(self, by_exponent: dict[int, Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of ``sum c * zeta^e`` over ``{e: c}``."""
        out = [Fraction(0)] * self.degree
        for e, c in by_exponent.items():
            if not c:
                continue
            for i, p in enumerate(self._powers[e % self.order]):
                if p:
                    out[i] += c * p
        return tuple(out)

    def galois(self, coords, a: int) -> tuple[Fraction, ...]:
        """Image under ``zeta -> zeta^a``."""
        return self.reduce({(a * k) % self.order: c for k, c in enumerate(coords) if c})


@lru_cache(maxsize=None)
def field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


class CyclotomicElement:
    """An element of ``Q(zeta_N)``."""

    __slots__ = ("field", "coords")

    def __init__(self, fld: CyclotomicField | int, coords=None):
        if isinstance(fld, int):
            fld = field(fld)
        self.field = fld
        if coords is None:
            coords = [0] * fld.degree
        coords = tuple(as_rational(c) for c in coords)
        if len(coords) != fld.degree:
            raise ValueError(f"expected {fld.degree} coordinates, got {len(coords)}")
        self.coords = coords

    @classmethod
    def rational(cls, q, order: int = 1):
        fld = field(order)
        return cls(fld, [q] + [0] * (fld.degree - 1))

    @classmethod
    def root_of_unity(cls, order: int, k: int = 1):
        fld = field(order)
        return cls(fld, fld.power(k))

    @classmethod
    def from_exponents(cls, order: int, by_exponent: dict[int, Fraction]):
        fld = field(order)
        return cls(fld, fld.reduce(by_exponent))

    @property
    def order(self) -> int:
        return self.field.order

    def embed(self, order: int) -> "CyclotomicElement":
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        if order == self.order:
            return self
        step = order // self.order
        return self.from_exponents(order, {k * step: c for k, c in enumerate(self.coords) if c})

    def _common(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicReal.rational(other, self.order)
        if not isinstance(other, CyclotomicElement):
            return None
        n = lcm(self.order, other.order)
        a, b = self.embed(n), other.embed(n)
        cls = CyclotomicReal if isinstance(self, CyclotomicReal) and isinstance(other, CyclotomicReal) \
            else CyclotomicElement
        return a, b, cls

    def __add__(self, other):
        common = self._common(other)
        if common is None:
            return NotImplemented
        a, b, cls = common
        return _make(cls, a.field, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return _make(type(self), self.field, tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _make(type(self), self.field, tuple(x * other for x in self.coords))
        common = self._common(other)
        if common is None:
            return NotImplemented
        a, b, cls = common
        prod: dict[int, Fraction] = {}
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if y:
                    prod[i + j] = prod.get(i + j, Fraction(0)) + x * y
        return _make(cls, a.field, a.field.reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicElement)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        q = self.to_rational()
        return hash(q) if q is not None else hash((self.order, self.coords))

    def conj(self):
        return _make(type(self), self.field, self.field.galois(self.coords, -1))

    def is_real(self) -> bool:
        return self.conj() == self

    def to_rational(self) -> Fraction | None:
        if any(self.coords[1:]):
            return None
        return self.coords[0]

    def to_mpc(self, dps: int = 50):
        with mpmath.workdps(dps + 10):
            z = mpmath.exp(2j * mpmath.pi / self.order)
            acc = mpmath.mpc(0)
            for k, c in enumerate(self.coords):
                if c:
                    acc += mpmath.mpf(c.numerator) / c.denominator * z ** k
            return acc

    def conductor(self) -> int:
        """Smallest ``M`` with the element in ``Q(zeta_M)``."""
        n = self.order
        for m in divisors(n):
            if m % 4 == 2:
                continue
            if all(
                self.field.galois(self.coords, a) == self.coords
                for a in range(1 + m, n, m)
                if gcd(a, n) == 1
            ):
                return m
        return n

    def __repr__(self):
        return f"{type(self).__name__}({self.order}, {[str(c) for c in self.coords]})"


class CyclotomicReal(CyclotomicElement):
    """A real element of a cyclotomic field (fixed by complex conjugation)."""

    __slots__ = ()

    def __init__(self, fld, coords=None, *, check: bool = True):
        super().__init__(fld, coords)
        if check and self.field.galois(self.coords, -1) != self.coords:
            raise ValueError("element is not real")

    @classmethod
    def from_element(cls, x: CyclotomicElement) -> "CyclotomicReal":
        return cls(x.field, x.coords)

    def to_mpf(self, dps: int = 50):
        with mpmath.workdps(dps + 10):
            return mpmath.re(self.to_mpc(dps))

    def sign(self) -> int:
        if self.is_zero():
            return 0
        dps = 30
        while True:
            v = self.to_mpf(dps)
            if abs(v) > mpmath.mpf(10) ** (-dps // 2):
                return 1 if v > 0 else -1
            dps *= 2

    def sqrt_form(self) -> tuple[int, Fraction, int] | None:
        """``(sign, c, m)`` with ``self == sign * c * sqrt(m)``, m squarefree > 1."""
        if self.to_rational() is not None:
            return None
        sq = (self * self).to_rational()
        if sq is None or sq <= 0:
            return None
        ab = sq.numerator * sq.denominator
        s, m = _split_square(ab)
        return self.sign(), Fraction(s, sq.denominator), m

    def cos_basis(self) -> tuple[int, list[Fraction]]:
        """``(M, c)`` with ``self == c[0] + sum_k c[k] cos(2 pi k / M)``.

        ``M`` is the conductor and ``k`` runs over ``1 .. phi(M)/2 - 1``.
        """
        M = self.conductor()
        q = self.to_rational()
        if q is not None:
            return 1, [q]
        x = self.embed(self.order)
        n = x.order
        half = field(M).degree // 2
        cols = [CyclotomicElement.rational(1, n).coords]
        step = n // M
        for k in range(1, half):
            e = k * step
            cols.append(tuple(Fraction(a + b, 2) for a, b in zip(field(n).power(e), field(n).power(-e))))
        matrix = [[col[i] for col in cols] for i in range(len(x.coords))]
        return M, solve_linear(matrix, list(x.coords))


def _make(cls, fld, coords):
    if cls is CyclotomicReal:
        return CyclotomicReal(fld, coords, check=False)
    return CyclotomicElement(fld, coords)


def _split_square(n: int) -> tuple[int, int]:
    """``n = s^2 * m`` with ``m`` squarefree."""
    s, m, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            m *= p
        p += 1
    return s, m * n


def cos_root(order: int, k: int) -> CyclotomicReal:
    """``cos(2 pi k / order)`` as a field element."""
    n = lcm(order, 4)
    fld = field(n)
    e = k * (n // order)
    return CyclotomicReal(fld, tuple(Fraction(a + b, 2) for a, b in zip(fld.power(e), fld.power(-e))))


def sin_root(order: int, k: int) -> CyclotomicReal:
    """``sin(2 pi k / order) = (zeta^k - zeta^-k) / (2i)``."""
    n = lcm(order, 4)
    fld = field(n)
    e = k * (n // order)
    # 1/(2i) = -i/2 and -i = zeta_n^(-n/4)
    q = n // 4
    merged: dict[int, Fraction] = {}
    for k2, c in ((e, Fraction(1, 2)), (-e, Fraction(-1, 2))):
        key = (k2 - q) % n
        merged[key] = merged.get(key, Fraction(0)) + c
    return CyclotomicReal(fld, fld.reduce(merged))


def sqrt_int(m: int) -> CyclotomicReal:
    """Exact ``sqrt(m)`` for ``m >= 1`` from quadratic Gauss sums."""
    if m == 1:
        return CyclotomicReal(field(1), [1])
    s, core = _split_square(m)
    if core == 1:
        return CyclotomicReal(field(1), [s])
    # sqrt(p*) = sum_a (a/p) zeta_p^a for odd p; sqrt(2) = zeta_8 + zeta_8^-1
    acc = CyclotomicReal(field(1), [s])
    n = core
    for p in _prime_factors(n):
        if p == 2:
            fac = CyclotomicReal(field(8), field(8).reduce({1: Fraction(1), 7: Fraction(1)}))
        else:
            g = CyclotomicElement.from_exponents(
                p, {a: Fraction(_legendre(a, p)) for a in range(1, p)})
            if p % 4 == 3:  # g = i*sqrt(p)
                g = g * CyclotomicElement.root_of_unity(4, 3)
            fac = CyclotomicReal.from_element(g)
        acc = acc * fac
    return acc


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _legendre(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


__all__ = [
    "CyclotomicField",
    "CyclotomicElement",
    "CyclotomicReal",
    "field",
    "cos_root",
    "sin_root",
    "sqrt_int",
]
