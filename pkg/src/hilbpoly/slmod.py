"""Weight multiplicities of symmetric powers of binary-form modules.

The coefficient ``a_{i,j}`` (``0 <= j <= d_i``) of the i-th form carries
torus weight ``d_i - 2j``. The dimension of the degree-n invariants is the
multiplicity of weight 0 minus the multiplicity of weight 2 in
``S^n(V_{d_1} + ... + V_{d_s})`` (Cayley-Sylvester). For a single form this
is the familiar count of solutions of
``a_1 + 2 a_2 + ... + d a_d = (dn - k)/2``, ``a_0 + ... + a_d = n``.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from math import comb

import numpy as np

from .exact import Poly, exact_div


class CountingError(RuntimeError):
    """A count came out impossible (e.g. a negative dimension)."""


@dataclass(frozen=True)
class DegreeVector:
    degrees: tuple[int, ...]

    def __init__(self, degrees):
        if isinstance(degrees, int):
            degrees = (degrees,)
        degrees = tuple(int(d) for d in degrees)
        if not degrees:
            raise ValueError("need at least one binary form")
        if any(d < 1 for d in degrees):
            raise ValueError(f"form degrees must be positive, got {degrees}")
        object.__setattr__(self, "degrees", degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def canonical(self) -> "DegreeVector":
        """Sorted descending; the algebra does not depend on the order."""
        return DegreeVector(sorted(self.degrees, reverse=True))

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def dimension(self) -> int:
        """``dim V_d = sum(d_i + 1)``."""
        return sum(d + 1 for d in self.degrees)

    def weights(self) -> list[int]:
        return [d - 2 * j for d in self.degrees for j in range(d + 1)]

    def __str__(self):
        return "(" + ",".join(map(str, self.degrees)) + ")"


def as_degree_vector(d) -> DegreeVector:
    return d if isinstance(d, DegreeVector) else DegreeVector(d)


class WeightTable:
    """``counts(n, w)``: number of degree-n monomials of total weight ``w``.

    Row ``n`` is stored with weight offset ``max_n * D`` (``D`` the largest
    form degree) so every weight indexes nonnegatively.
    """

    def __init__(self, degree_vector: DegreeVector, max_n: int, table: np.ndarray):
        self.degree_vector = degree_vector
        self.max_n = max_n
        self._offset = max_n * degree_vector.max_degree
        self._table = table
        self._table.flags.writeable = False

    def counts(self, n: int, w: int) -> int:
        if n < 0 or n > self.max_n:
            raise IndexError(f"degree {n} outside table range 0..{self.max_n}")
        i = w + self._offset
        if i < 0 or i >= self._table.shape[1]:
            return 0
        return int(self._table[n, i])

    def row(self, n: int) -> dict[int, int]:
        """Nonzero ``{weight: count}`` for degree ``n``."""
        r = self._table[n]
        return {i - self._offset: int(c) for i, c in enumerate(r) if c}


def build_weight_table(d, max_n: int) -> WeightTable:
    """Dynamic program over the variables of ``V_d``.

    Adding a variable of weight ``u`` multiplies the bivariate generating
    function by ``1/(1 - t x^u)``, i.e. ``T[n, w] += T[n-1, w-u]`` swept in
    increasing ``n``.
    """
    d = as_degree_vector(d)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    offset = max_n * d.max_degree
    width = 2 * offset + 1
    table = np.zeros((max_n + 1, width), dtype=object)
    table[:, :] = 0
    table[0, offset] = 1
    for u in d.weights():
        for n in range(1, max_n + 1):
            if u >= 0:
                table[n, u:] += table[n - 1, : width - u]
            else:
                table[n, : width + u] += table[n - 1, -u:]
    return WeightTable(d, max_n, table)


_cache: dict[tuple[int, ...], WeightTable] = {}
_cache_lock = threading.Lock()


def weight_table(d, n: int) -> WeightTable:
    """Cached table covering at least degree ``n``; grows by doubling."""
    d = as_degree_vector(d).canonical()
    key = d.degrees
    with _cache_lock:
        tab = _cache.get(key)
        if tab is None or tab.max_n < n:
            size = max(n, 2 * tab.max_n if tab else 16)
            tab = build_weight_table(d, size)
            _cache[key] = tab
        return tab


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def omega(d, n: int, k: int) -> int:
    """Multiplicity of weight ``k`` in ``S^n(V_d)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return weight_table(d, n).counts(n, k)


def hilbert_value(d, n: int) -> int:
    """``dim (I_d)_n = omega(d, n, 0) - omega(d, n, 2)``."""
    tab = weight_table(d, n)
    h = tab.counts(n, 0) - tab.counts(n, 2)
    if h < 0:
        raise CountingError(f"negative dimension {h} for d={as_degree_vector(d)}, n={n}")
    return h


def hilbert_values(d, count: int) -> list[int]:
    """``[hilbert_value(d, n) for n in range(count)]`` from one table."""
    if count <= 0:
        return []
    tab = weight_table(d, count - 1)
    out = []
    for n in range(count):
        h = tab.counts(n, 0) - tab.counts(n, 2)
        if h < 0:
            raise CountingError(f"negative dimension {h} for d={as_degree_vector(d)}, n={n}")
        out.append(h)
    return out


def monomial_count(d, n: int) -> int:
    """``dim S^n(V_d)``."""
    m = as_degree_vector(d).dimension
    return comb(n + m - 1, n)


def gaussian_binomial(d: int, n: int) -> Poly:
    """``prod_{i=1..n} (1 - q^{d+i}) / (1 - q^i)`` as a polynomial in ``q``."""
    if d < 0 or n < 0:
        raise ValueError("gaussian_binomial needs d, n >= 0")
    # after step i the partial product is [d+i choose i]_q, so each division is exact
    g = Poly([1])
    for i in range(1, n + 1):
        g = exact_div(g * (1 - Poly.monomial(d + i)), 1 - Poly.monomial(i))
    return g


def hilbert_value_qbin(d: int, n: int) -> int:
    """Coefficient of ``q^{nd/2}`` in ``(1 - q) [d+n choose n]_q``; single form only."""
    if d < 1 or n < 0:
        raise ValueError("hilbert_value_qbin needs d >= 1, n >= 0")
    if (n * d) % 2:
        return 0
    p = (1 - Poly.monomial(1)) * gaussian_binomial(d, n)
    c = p[n * d // 2]
    if c.denominator != 1:
        raise CountingError(f"non-integral coefficient {c}")
    return int(c)


def hilbert_values_qbin(d: int, count: int) -> list[int]:
    """``hilbert_value_qbin(d, n)`` for ``n < count``, updating the q-binomial in place."""
    if d < 1:
        raise ValueError("hilbert_values_qbin needs d >= 1")
    out = []
    g = Poly([1])
    one_minus_q = 1 - Poly.monomial(1)
    for n in range(count):
        if n:
            g = exact_div(g * (1 - Poly.monomial(d + n)), 1 - Poly.monomial(n))
        if (n * d) % 2:
            out.append(0)
            continue
        c = (one_minus_q * g)[n * d // 2]
        if c.denominator != 1:
            raise CountingError(f"non-integral coefficient {c}")
        out.append(int(c))
    return out


# Brute-force oracles, exponential in n; for tests only.

def omega_bruteforce(d, n: int, k: int) -> int:
    """Enumerate every degree-n monomial of ``V_d`` and count weight ``k``."""
    w = as_degree_vector(d).weights()
    return sum(1 for mono in itertools.combinations_with_replacement(w, n) if sum(mono) == k)


def omega_single_form_system(d: int, n: int, k: int) -> int:
    """Count ``alpha >= 0`` with ``sum j*alpha_j = (dn-k)/2`` and ``sum alpha_j = n``."""
    if (d * n - k) % 2:
        return 0
    target = (d * n - k) // 2
    count = 0

    def rec(j, left, acc):
        nonlocal count
        if j == 0:
            if acc == target:
                count += 1
            return
        for a in range(left + 1):
            s = acc + j * a
            if s > target:
                break
            rec(j - 1, left - a, s)

    rec(d, n, 0)
    return count
