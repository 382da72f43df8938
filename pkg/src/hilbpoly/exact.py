"""Exact arithmetic over the rationals.

Rationals are :class:`fractions.Fraction`. Polynomials are dense and
immutable; the zero polynomial has no coefficients and degree ``NEG_INF``.
The gcd uses monic Euclidean steps, which keep the remainders small for the
low-degree, small-coefficient polynomials that occur here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def rational_to_str(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(x)


class Poly:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self, "z")

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return poly_divrem(self, _coerce(other))

    def __floordiv__(self, other):
        return poly_divrem(self, _coerce(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, _coerce(other))[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return Poly(c / lc for c in self.coeffs)

    def truncate(self, order: int) -> "Poly":
        return Poly(self.coeffs[:order])

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(Fraction(s) for s in data)


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    bnz = [(j, y) for j, y in enumerate(b.coeffs) if y]
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in bnz:
            out[i + j] += x * y
    return Poly(out)


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Return ``(q, r)`` with ``a == q*b + r`` and ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lc = b.coeffs[-1]
    if len(rem) - 1 < db:
        return Poly(), a
    quot = [Fraction(0)] * (len(rem) - db)
    bnz = [(j, y) for j, y in enumerate(b.coeffs) if y]
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = c / lc
        quot[k - db] = c
        for j, y in bnz:
            rem[k - db + j] -= c * y
    return Poly(quot), Poly(rem[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid with monic normalization at each step."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, poly_divrem(a, b)[1].monic()
    return a


def exact_div(a: Poly, b: Poly) -> Poly:
    """``a / b``, raising ``ArithmeticError`` if the division leaves a remainder."""
    q, r = poly_divrem(a, b)
    if not r.is_zero():
        raise ArithmeticError(f"{a!r} is not divisible by {b!r}")
    return q


@dataclass(frozen=True)
class SeriesPrefix:
    """A power series known modulo ``z**order``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a series prefix needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "SeriesPrefix":
        if order > self.order:
            raise ValueError(f"cannot extend a prefix of order {self.order} to {order}")
        return SeriesPrefix(self.coeffs[:order])

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)


def series_of_ratfun(num: Poly, den: Poly, order: int) -> SeriesPrefix:
    """First ``order`` Taylor coefficients of ``num/den`` at ``z = 0``."""
    if den[0] == 0:
        raise ValueError("denominator vanishes at z=0; not a power series")
    if order < 1:
        raise ValueError("order must be at least 1")
    d0 = den[0]
    dc = den.coeffs
    out: list[Fraction] = []
    for n in range(order):
        acc = num[n]
        for k in range(1, min(n, len(dc) - 1) + 1):
            acc -= dc[k] * out[n - k]
        out.append(acc / d0)
    return SeriesPrefix(tuple(out))


class LinearSystemError(ValueError):
    pass


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly.

    The system may be square or overdetermined but must have a unique
    solution; every surplus equation is checked. Pivots are chosen as the
    first nonzero entry in each column.
    """
    rows = len(matrix)
    if rows != len(rhs):
        raise LinearSystemError(f"{rows} equations but {len(rhs)} right-hand sides")
    if rows == 0:
        return []
    cols = len(matrix[0])
    aug = []
    for i, row in enumerate(matrix):
        if len(row) != cols:
            raise LinearSystemError(f"equation {i} has {len(row)} coefficients, expected {cols}")
        aug.append([as_rational(x) for x in row] + [as_rational(rhs[i])])
    if rows < cols:
        raise LinearSystemError(f"underdetermined: {rows} equations for {cols} unknowns")

    for col in range(cols):
        piv = next((r for r in range(col, rows) if aug[r][col] != 0), None)
        if piv is None:
            raise LinearSystemError(f"singular system: no nonzero pivot in column {col}")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv = 1 / prow[col]
        for j in range(col, cols + 1):
            prow[j] *= inv
        for r in range(rows):
            if r == col:
                continue
            f = aug[r][col]
            if f == 0:
                continue
            row = aug[r]
            for j in range(col, cols + 1):
                row[j] -= f * prow[j]

    for r in range(cols, rows):
        if aug[r][cols] != 0:
            raise LinearSystemError(f"inconsistent system: equation {r} fails after elimination")
    return [aug[i][cols] for i in range(cols)]


def format_poly(p: Poly, var: str = "z", *, ascending: bool = True) -> str:
    """Human-readable text such as ``1 - z + 1/2*z^2``."""
    if p.is_zero():
        return "0"
    idx = range(len(p.coeffs))
    if not ascending:
        idx = reversed(idx)
    parts = []
    for i in idx:
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
