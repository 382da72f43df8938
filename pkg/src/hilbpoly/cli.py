"""``hilbpoly`` command-line front end.

    hilbpoly <pol|series|eval|verify|poincare> d1 [d2 ...]
             [--format constituents|fourier|latex|json] [--n N] [--terms T]
             [--no-cache] [--cache-dir PATH]

The cache directory may also be set with ``HILBPOLY_CACHE_DIR``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .exact import format_poly
from .quasipoly import QuasiPolynomial, STYLES, check_against, evaluate, fit, render
from .series_recon import (
    CyclotomicFactorization,
    RationalFunction,
    factor_denominator,
    reconstruct,
    totient,
)
from .slmod import DegreeVector, hilbert_values, hilbert_values_qbin

COMMANDS = ("pol", "series", "eval", "verify", "poincare")
CACHE_ENV = "HILBPOLY_CACHE_DIR"
DEFAULT_VERIFY_BOUND = 200


@dataclass(frozen=True)
class JobConfig:
    degrees: DegreeVector
    command: str
    format: str = "fourier"
    n: int | None = None
    terms: int | None = None
    cache_dir: Path | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in STYLES:
            raise ValueError(f"unknown format {self.format!r}")
        if self.command == "eval" and self.n is None:
            raise ValueError("eval requires --n")
        if self.command == "series" and self.terms is None:
            raise ValueError("series requires --terms")
        if self.n is not None and self.n < 0:
            raise ValueError("--n must be nonnegative")
        if self.terms is not None and self.terms < 1:
            raise ValueError("--terms must be at least 1")


@dataclass(frozen=True)
class PipelineResult:
    degrees: DegreeVector
    rational_function: RationalFunction
    factorization: CyclotomicFactorization
    quasipolynomial: QuasiPolynomial

    def to_json(self) -> dict:
        return {
            "version": __version__,
            "degrees": list(self.degrees.degrees),
            "rational_function": self.rational_function.to_json(),
            "factorization": self.factorization.to_json(),
            "quasipolynomial": self.quasipolynomial.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PipelineResult":
        if data.get("version") != __version__:
            raise ValueError("cache entry from another version")
        d = DegreeVector(data["degrees"])
        rf = RationalFunction.from_json(data["rational_function"])
        fac = CyclotomicFactorization.from_json(data["factorization"])
        qp = QuasiPolynomial.from_json(data["quasipolynomial"])
        if fac.expand() != rf.den or qp.degrees != d:
            raise ValueError("inconsistent cache entry")
        return cls(d, rf, fac, qp)


def run_pipeline(d) -> PipelineResult:
    d = DegreeVector(d).canonical()
    rf = reconstruct(d)
    fac = factor_denominator(rf)
    qp = fit(d, rf, fac)
    return PipelineResult(d, rf, fac, qp)


# --- cache --------------------------------------------------------------------

def cache_key(d: DegreeVector, stage: str = "pipeline") -> str:
    canon = sorted(d.degrees, reverse=True)
    raw = json.dumps({"degrees": canon, "stage": stage, "version": __version__}, sort_keys=True)
    return hashlib.sha256(raw.encode()).hexdigest()


def cached_pipeline(d: DegreeVector, cache_dir: Path | None) -> PipelineResult:
    if cache_dir is None:
        return run_pipeline(d)
    path = Path(cache_dir) / f"{cache_key(d)}.json"
    if path.exists():
        try:
            return PipelineResult.from_json(json.loads(path.read_text()))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            print(f"warning: unreadable cache entry {path} ({exc}); recomputing", file=sys.stderr)
    result = run_pipeline(d)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(result.to_json(), sort_keys=True))
    tmp.replace(path)
    return result


# --- commands -----------------------------------------------------------------

def cmd_pol(cfg: JobConfig) -> str:
    res = cached_pipeline(cfg.degrees, cfg.cache_dir)
    return render(res.quasipolynomial, cfg.format)


def cmd_series(cfg: JobConfig) -> str:
    values = hilbert_values(cfg.degrees, cfg.terms)
    return "\n".join(f"{n}: {v}" for n, v in enumerate(values))


def cmd_eval(cfg: JobConfig) -> str:
    res = cached_pipeline(cfg.degrees, cfg.cache_dir)
    qp = res.quasipolynomial
    if cfg.n < qp.valid_from:
        print(f"warning: n={cfg.n} is below the validity threshold {qp.valid_from}; "
              f"the quasi-polynomial need not equal H(n) there", file=sys.stderr)
    value = evaluate(qp, cfg.n)
    if cfg.format == "json":
        return json.dumps({"degrees": list(qp.degrees.degrees), "n": cfg.n, "value": str(value)},
                          sort_keys=True)
    return str(value)


def _poly_factor_text(fac: CyclotomicFactorization) -> list[str]:
    lines = []
    for m, k in fac.factors:
        roots = totient(m)
        what = "root" if roots == 1 else "roots"
        lines.append(f"  Phi{m}: {roots} {what} of unity of order {m}, multiplicity {k}")
    return lines


def cmd_poincare(cfg: JobConfig) -> str:
    res = cached_pipeline(cfg.degrees, cfg.cache_dir)
    rf, fac = res.rational_function, res.factorization
    if cfg.format == "json":
        return json.dumps({
            "degrees": list(res.degrees.degrees),
            "rational_function": rf.to_json(),
            "factorization": fac.to_json(),
        }, sort_keys=True)
    if cfg.format == "latex":
        num = format_poly(rf.num, "z")
        den = format_poly(rf.den, "z")
        return rf"\frac{{{num}}}{{{den}}}".replace("*", " ")
    lines = [
        f"numerator:   {format_poly(rf.num, 'z')}",
        f"denominator: {format_poly(rf.den, 'z')}",
        f"denominator = {fac}",
    ]
    lines += _poly_factor_text(fac)
    return "\n".join(lines)


def cmd_verify(cfg: JobConfig) -> tuple[str, bool]:
    bound = cfg.terms if cfg.terms is not None else DEFAULT_VERIFY_BOUND
    res = run_pipeline(cfg.degrees)
    qp, rf = res.quasipolynomial, res.rational_function
    values = hilbert_values(res.degrees, bound + 1)
    lines = []
    ok = True

    bad = check_against(qp, values)
    if bad is None:
        lines.append(f"PASS quasi-polynomial equals H(n) for {qp.valid_from} <= n <= {bound}")
    else:
        ok = False
        lines.append(f"FAIL quasi-polynomial at n={bad}: {evaluate(qp, bad)} != H(n) = {values[bad]}")

    series = list(rf.series(bound + 1))
    bad = next((n for n in range(bound + 1) if series[n] != values[n]), None)
    if bad is None:
        lines.append(f"PASS Poincare series reproduces H(n) for 0 <= n <= {bound}")
    else:
        ok = False
        lines.append(f"FAIL Poincare series at n={bad}: {series[bad]} != H(n) = {values[bad]}")

    if len(res.degrees) == 1:
        qb = hilbert_values_qbin(res.degrees.degrees[0], bound + 1)
        bad = next((n for n in range(bound + 1) if qb[n] != values[n]), None)
        if bad is None:
            lines.append(f"PASS q-binomial formula agrees for 0 <= n <= {bound}")
        else:
            ok = False
            lines.append(f"FAIL q-binomial formula at n={bad}: {qb[bad]} != H(n) = {values[bad]}")

    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines), ok


# --- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hilbpoly",
        description="Hilbert functions, Poincare series and Hilbert quasi-polynomials "
                    "of algebras of joint SL2-invariants of binary forms.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("degrees", nargs="+", type=int, metavar="d", help="degrees of the binary forms")
    p.add_argument("--format", default="fourier", choices=STYLES)
    p.add_argument("--n", type=int, default=None, help="degree to evaluate (eval)")
    p.add_argument("--terms", type=int, default=None,
                   help="number of Hilbert values (series) or verification bound (verify)")
    p.add_argument("--no-cache", action="store_true", help="ignore the result cache")
    p.add_argument("--cache-dir", default=None, help=f"cache directory (default ${CACHE_ENV})")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def config_from_args(args: argparse.Namespace) -> JobConfig:
    cache_dir = None
    if not args.no_cache:
        cache_dir = args.cache_dir or os.environ.get(CACHE_ENV) or None
    return JobConfig(
        degrees=DegreeVector(args.degrees),
        command=args.command,
        format=args.format,
        n=args.n,
        terms=args.terms,
        cache_dir=Path(cache_dir) if cache_dir else None,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if cfg.command == "verify":
            text, ok = cmd_verify(cfg)
            print(text)
            return 0 if ok else 1
        handler = {"pol": cmd_pol, "series": cmd_series, "eval": cmd_eval, "poincare": cmd_poincare}
        print(handler[cfg.command](cfg))
    except Exception as exc:  # pipeline failures become a diagnostic and exit code 1
        print(f"hilbpoly: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
