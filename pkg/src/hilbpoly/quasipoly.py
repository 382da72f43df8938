"""Hilbert quasi-polynomials: fitting, evaluation, Fourier form, rendering."""

from __future__ import annotations

import json
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .cyclofield import CyclotomicElement, CyclotomicReal, cos_root, field, sin_root
from .exact import LinearSystemError, Poly, format_poly, poly_divrem, solve_linear
from .series_recon import (
    CyclotomicFactorization,
    RationalFunction,
    cyclotomic,
    divisors,
    lcm,
    period_and_degree,
)
from .slmod import DegreeVector, as_degree_vector, hilbert_values

VERIFY_POINTS = 2


class VerificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class QuasiPolynomial:
    """``n -> constituents[n % period](n)``, guaranteed for ``n >= valid_from``."""

    period: int
    constituents: tuple[Poly, ...]
    valid_from: int = 0
    degrees: DegreeVector | None = None

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.constituents) != self.period:
            raise ValueError(f"need {self.period} constituents, got {len(self.constituents)}")

    def __call__(self, n: int) -> Fraction:
        return evaluate(self, n)

    @property
    def degree(self):
        """Largest constituent degree (``-inf`` for the zero function)."""
        return max(p.degree for p in self.constituents)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.constituents)

    def with_period(self, period: int) -> "QuasiPolynomial":
        """Same function described with a multiple of the period."""
        if period % self.period:
            raise ValueError(f"{period} is not a multiple of {self.period}")
        return QuasiPolynomial(
            period,
            tuple(self.constituents[r % self.period] for r in range(period)),
            self.valid_from,
            self.degrees,
        )

    def reduced(self) -> "QuasiPolynomial":
        """Fold to the smallest period dividing the current one."""
        for p in divisors(self.period):
            if all(self.constituents[r] == self.constituents[r % p] for r in range(self.period)):
                return QuasiPolynomial(p, self.constituents[:p], self.valid_from, self.degrees)
        return self

    def coefficient_sequence(self, t: int) -> list[Fraction]:
        """The period-``L`` sequence of ``n^t`` coefficients."""
        return [p[t] for p in self.constituents]

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees.degrees) if self.degrees else None,
            "period": self.period,
            "valid_from": self.valid_from,
            "constituents": [p.to_json() for p in self.constituents],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuasiPolynomial":
        degrees = DegreeVector(data["degrees"]) if data.get("degrees") else None
        return cls(
            int(data["period"]),
            tuple(Poly.from_json(c) for c in data["constituents"]),
            int(data["valid_from"]),
            degrees,
        )


def threshold(rf: RationalFunction) -> int:
    """First ``n`` past the polynomial part of ``num/den``."""
    if rf.num.is_zero():
        return 0
    return max(0, rf.num.degree - rf.den.degree + 1)


def fit(d, rf: RationalFunction, fac: CyclotomicFactorization) -> QuasiPolynomial:
    """Fit one polynomial per residue class to exact Hilbert values.

    Each residue class gets ``degree_bound + 1`` interpolation points and
    ``VERIFY_POINTS`` further points that must also be matched.
    """
    d = as_degree_vector(d)
    if fac.expand() != rf.den:
        raise ValueError("factorization does not match the denominator")
    L, degree_bound, _ = period_and_degree(fac)
    n0 = threshold(rf)
    if degree_bound is None:
        values = hilbert_values(d, n0 + VERIFY_POINTS)
        bad = [n for n in range(n0, n0 + VERIFY_POINTS) if values[n] != 0]
        if bad:
            raise VerificationError(f"expected H({bad[0]}) = 0 for a pole-free series, got {values[bad[0]]}")
        return QuasiPolynomial(1, (Poly(),), n0, d)

    samples = degree_bound + 1 + VERIFY_POINTS
    values = hilbert_values(d, n0 + L * samples)
    constituents: list[Poly | None] = [None] * L
    for r in range(L):
        ns = [n0 + r + k * L for k in range(samples)]
        matrix = [[Fraction(n) ** i for i in range(degree_bound + 1)] for n in ns]
        try:
            coeffs = solve_linear(matrix, [values[n] for n in ns])
        except LinearSystemError as exc:
            raise VerificationError(
                f"residue {(n0 + r) % L} mod {L}: no polynomial of degree <= {degree_bound} "
                f"fits H at n = {ns}: {exc}"
            ) from exc
        constituents[(n0 + r) % L] = Poly(coeffs)
    return QuasiPolynomial(L, tuple(constituents), n0, d)


def evaluate(qp: QuasiPolynomial, n: int) -> Fraction:
    return qp.constituents[n % qp.period](Fraction(n))


# --- Fourier form -------------------------------------------------------------

@dataclass(frozen=True)
class FourierTerm:
    """``cos_coeff * n^power * cos(2 pi j n / L) + sin_coeff * n^power * sin(...)``."""

    power: int
    frequency: int
    cos_coeff: CyclotomicReal
    sin_coeff: CyclotomicReal


@dataclass(frozen=True)
class FourierForm:
    period: int
    terms: tuple[FourierTerm, ...]
    valid_from: int = 0
    degrees: DegreeVector | None = None

    def term(self, power: int, frequency: Fraction | int) -> FourierTerm | None:
        """Look up by power and frequency as a fraction of a full turn (``j/L``)."""
        f = Fraction(frequency)
        for t in self.terms:
            if t.power == power and Fraction(t.frequency, self.period) == f:
                return t
        return None

    def evaluate(self, n: int) -> Fraction:
        """Exact value at integer ``n`` using field arithmetic."""
        acc: CyclotomicElement = CyclotomicReal.rational(0)
        for t in self.terms:
            k = (t.frequency * n) % self.period
            scale = Fraction(n) ** t.power
            if not t.cos_coeff.is_zero():
                acc = acc + t.cos_coeff * cos_root(self.period, k) * scale
            if not t.sin_coeff.is_zero():
                acc = acc + t.sin_coeff * sin_root(self.period, k) * scale
        q = acc.to_rational()
        if q is None:
            raise ArithmeticError(f"Fourier form took a non-rational value at n={n}")
        return q

    def evaluate_numeric(self, n, dps: int = 50):
        with mpmath.workdps(dps):
            acc = mpmath.mpf(0)
            for t in self.terms:
                arg = 2 * mpmath.pi * t.frequency * n / self.period
                acc += mpmath.mpf(n) ** t.power * (
                    t.cos_coeff.to_mpf(dps) * mpmath.cos(arg) + t.sin_coeff.to_mpf(dps) * mpmath.sin(arg)
                )
            return acc


def _zero_real() -> CyclotomicReal:
    return CyclotomicReal.rational(0)


def to_fourier(qp: QuasiPolynomial) -> FourierForm:
    """Discrete Fourier expansion of each coefficient sequence over ``Z/L``.

    Frequencies ``j`` of the same order ``m = L/gcd(j, L)`` are Galois
    conjugate, so the whole order class is skipped when the folded sequence
    vanishes at a primitive ``m``-th root of unity.
    """
    L = qp.period
    terms: list[FourierTerm] = []
    max_t = qp.degree
    if max_t == float("-inf"):
        return FourierForm(L, (), qp.valid_from, qp.degrees)
    for t in range(int(max_t) + 1):
        a = qp.coefficient_sequence(t)
        if not any(a):
            continue
        for m in divisors(L):
            folded = [Fraction(0)] * m
            for r, x in enumerate(a):
                folded[r % m] += x
            if poly_divrem(Poly(folded), cyclotomic(m))[1].is_zero():
                continue
            n4 = lcm(m, 4)
            fld = field(n4)
            step = n4 // m
            quarter = n4 // 4
            for jm in range(0, m // 2 + 1):
                if gcd(jm, m) != 1:
                    continue
                j = jm * (L // m)
                # A_{+j} = (1/L) sum_s folded[s] zeta_m^{-jm s}
                plus: dict[int, Fraction] = {}
                minus: dict[int, Fraction] = {}
                for s, x in enumerate(folded):
                    if x:
                        e = (jm * s * step) % n4
                        plus[(-e) % n4] = plus.get((-e) % n4, Fraction(0)) + x / L
                        minus[e] = minus.get(e, Fraction(0)) + x / L
                if m <= 2:
                    # j = 0 or j = L/2: a single real exponential, no sine
                    cos_c = CyclotomicReal(fld, fld.reduce(plus))
                    sin_c = _zero_real()
                else:
                    cos_part = dict(plus)
                    for e, c in minus.items():
                        cos_part[e] = cos_part.get(e, Fraction(0)) + c
                    # i * (A_j - A_{-j}); i = zeta^(n4/4)
                    sin_part: dict[int, Fraction] = {}
                    for e, c in plus.items():
                        k = (e + quarter) % n4
                        sin_part[k] = sin_part.get(k, Fraction(0)) + c
                    for e, c in minus.items():
                        k = (e + quarter) % n4
                        sin_part[k] = sin_part.get(k, Fraction(0)) - c
                    cos_c = CyclotomicReal(fld, fld.reduce(cos_part))
                    sin_c = CyclotomicReal(fld, fld.reduce(sin_part))
                if cos_c.is_zero() and sin_c.is_zero():
                    continue
                terms.append(FourierTerm(t, j, cos_c, sin_c))
    terms.sort(key=lambda x: (x.frequency, x.power))
    return FourierForm(L, tuple(terms), qp.valid_from, qp.degrees)


# --- rendering ----------------------------------------------------------------

STYLES = ("constituents", "fourier", "latex", "json")


def render(obj, style: str = "fourier") -> str:
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")
    if style == "constituents":
        if not isinstance(obj, QuasiPolynomial):
            raise TypeError("constituents style needs a QuasiPolynomial")
        return render_constituents(obj)
    if style == "json":
        if isinstance(obj, QuasiPolynomial):
            return json.dumps(obj.to_json(), sort_keys=True)
        return json.dumps(fourier_to_json(obj), sort_keys=True)
    form = obj if isinstance(obj, FourierForm) else to_fourier(obj)
    return render_fourier(form, latex=(style == "latex"))


def render_constituents(qp: QuasiPolynomial) -> str:
    L = qp.period
    text = [format_poly(p, "n", ascending=False) for p in qp.constituents]
    groups: dict[str, list[int]] = {}
    for r, s in enumerate(text):
        groups.setdefault(s, []).append(r)
    if L == 1:
        body = text[0]
    else:
        # the largest class (if it has at least two residues) becomes "otherwise"
        other = max(groups, key=lambda s: (len(groups[s]), -groups[s][0]))
        if len(groups[other]) < 2:
            other = None
        parts = []
        for s, rs in sorted(groups.items(), key=lambda kv: kv[1][0]):
            if s == other:
                continue
            parts.append(f"n≡{','.join(map(str, rs))} (mod {L}): {s}")
        if other is not None:
            parts.append(f"otherwise: {other}")
        body = " ; ".join(parts)
    if qp.valid_from:
        body += f"\nvalid for n >= {qp.valid_from}"
    return body


def _frac_pi(f: Fraction, latex: bool, var: str = "n") -> str:
    """``f * Pi * var`` in Maple or LaTeX spelling."""
    tail = f" {var}" if latex and var else (f"*{var}" if var else "")
    pi = r"\pi" if latex else "Pi"
    if f == 1:
        return pi + tail
    if latex:
        return rf"\frac{{{f.numerator}}}{{{f.denominator}}}\pi" + tail
    return f"{f}*{pi}" + tail


def _rational_text(q: Fraction, latex: bool) -> str:
    if latex and q.denominator != 1:
        return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"
    return str(q)


def coefficient_text(c: CyclotomicReal, latex: bool = False) -> tuple[int, str, bool]:
    """``(sign, magnitude_text, is_rational)`` for an exact real coefficient.

    An empty magnitude text stands for 1.
    """
    q = c.to_rational()
    if q is not None:
        if q == 0:
            return 0, "0", True
        mag = abs(q)
        return (1 if q > 0 else -1), ("" if mag == 1 else _rational_text(mag, latex)), True
    sf = c.sqrt_form()
    if sf is not None:
        sign, k, m = sf
        root = rf"\sqrt{{{m}}}" if latex else f"sqrt({m})"
        if k == 1:
            return sign, root, False
        return sign, (f"{_rational_text(k, True)}{root}" if latex else f"{k}*{root}"), False
    M, coords = c.cos_basis()
    parts = []
    for k, x in enumerate(coords):
        if x == 0:
            continue
        if k == 0:
            mono = ""
        elif latex:
            mono = rf"\cos\left({_frac_pi(Fraction(2 * k, M), True, '')}\right)"
        else:
            mono = f"cos({_frac_pi(Fraction(2 * k, M), False, '')})"
        mag = abs(x)
        if not mono:
            body = _rational_text(mag, latex)
        elif mag == 1:
            body = mono
        else:
            body = f"{_rational_text(mag, latex)}{mono}" if latex else f"{mag}*{mono}"
        parts.append(("-" if x < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return 1, (rf"\left({out}\right)" if latex else f"({out})"), False


def _term_pieces(form: FourierForm, latex: bool):
    """``(sign, text, coeff, label)`` per nonzero monomial in canonical order."""
    L = form.period
    out = []
    for t in form.terms:
        f = Fraction(2 * t.frequency, L)
        for kind, c in (("cos", t.cos_coeff), ("sin", t.sin_coeff)):
            if c.is_zero():
                continue
            factors = []
            sign, mag, is_rat = coefficient_text(c, latex)
            if mag:
                factors.append(mag)
            if t.power == 1:
                factors.append("n")
            elif t.power > 1:
                factors.append(f"n^{{{t.power}}}" if latex else f"n^{t.power}")
            trig = ""
            if t.frequency:
                trig = (rf"\{kind}\left({_frac_pi(f, True)}\right)" if latex
                        else f"{kind}({_frac_pi(f, False)})")
                factors.append(trig)
            text = (" " if latex else "*").join(factors) if factors else "1"
            label = (trig or "1") if t.power == 0 else (
                f"n^{t.power}" + (f"*{trig}" if trig else ""))
            out.append((sign, text, c, is_rat, label))
    return out


def render_fourier(form: FourierForm, latex: bool = False) -> str:
    pieces = _term_pieces(form, latex)
    if not pieces:
        line = "0"
    else:
        line = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
        for sign, text, *_ in pieces[1:]:
            line += f" {'-' if sign < 0 else '+'} {text}"
    lines = [line]
    mark = "%" if latex else "#"
    for sign, text, c, is_rat, label in pieces:
        if is_rat:
            continue
        expr = coefficient_text(c, False)
        exact = ("-" if expr[0] < 0 else "") + (expr[1] or "1")
        approx = mpmath.nstr(c.to_mpf(50), 12, strip_zeros=False)
        lines.append(f"{mark} coefficient of {label}: {exact} ~= {approx}")
    if form.valid_from:
        lines.append(f"{mark} valid for n >= {form.valid_from}")
    return "\n".join(lines)


def real_to_json(c: CyclotomicReal) -> dict:
    return {"order": c.order, "coords": [str(x) for x in c.coords]}


def fourier_to_json(form: FourierForm) -> dict:
    return {
        "degrees": list(form.degrees.degrees) if form.degrees else None,
        "period": form.period,
        "valid_from": form.valid_from,
        "terms": [
            {
                "power": t.power,
                "frequency": t.frequency,
                "cos": real_to_json(t.cos_coeff),
                "sin": real_to_json(t.sin_coeff),
            }
            for t in form.terms
        ],
    }


def hilbert_quasipolynomial(d, term_budget: int | None = None) -> QuasiPolynomial:
    """Reconstruct, factor and fit in one call."""
    from .series_recon import factor_denominator, reconstruct

    rf = reconstruct(d, term_budget)
    return fit(d, rf, factor_denominator(rf))


def check_against(qp: QuasiPolynomial, values: Sequence[int], start: int | None = None) -> int | None:
    """First ``n >= start`` where ``qp`` disagrees with ``values[n]``, else ``None``."""
    lo = qp.valid_from if start is None else start
    for n in range(lo, len(values)):
        if evaluate(qp, n) != values[n]:
            return n
    return None
