"""Command-line front end.

    orthomoments --matrix "1 1; 1 1"
    orthomoments --matrix diag.txt --eval 5
    orthomoments --matrix "[[2]]" --eval 5 --mc-samples 1000000 --seed 7
    orthomoments --unitary --matrix "4 0"

Exit codes: 0 success or PASS, 1 Monte Carlo FAIL, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import TextIO

from .algebra import PolynomialN, RationalFunctionN, render_expanded, render_factored
from .errors import OrthoMomentsError, ParseError
from .integrator import IntegratorConfig, integrate, one_vector_unitary
from .oracle import mc_moment
from .powermatrix import PowerMatrix, make_power_matrix

N_SIGMA = 4.0


def _parse_json(text: str) -> PowerMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ParseError("expected a nonempty JSON array of arrays", 1, 1)
    for i, row in enumerate(data):
        for e in row:
            if isinstance(e, bool) or not isinstance(e, int):
                raise ParseError(f"non-integer entry {e!r} in row {i}", 1, 1)
    return make_power_matrix(data)


def _parse_grid(text: str) -> PowerMatrix:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        # ';' also separates rows so that one-line inline matrices work
        offset = 0
        for chunk in line.split(";"):
            row = []
            pos = offset
            for tok in chunk.split():
                pos = line.index(tok, pos)
                try:
                    row.append(int(tok))
                except ValueError:
                    raise ParseError(f"not an integer: {tok!r}", lineno, pos + 1) from None
                pos += len(tok)
            if row:
                rows.append(row)
            offset += len(chunk) + 1
    if not rows:
        raise ParseError("empty matrix", 1, 1)
    return make_power_matrix(rows)


def parse_matrix(text: str) -> PowerMatrix:
    """Parse a whitespace grid or a JSON array of arrays (starts with '[')."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        return _parse_json(text)
    return _parse_grid(text)


def render_matrix(m: PowerMatrix) -> str:
    if not m.rows:
        return " ".join("0" * m.ncols)
    return "\n".join(" ".join(str(e) for e in row) for row in m.rows)


def to_json(f: RationalFunctionN, valid_from: int) -> dict:
    return {
        "numerator": [str(c) for c in f.num.coeffs] or ["0"],
        "denominator": [str(c) for c in f.den.coeffs],
        "validFromN": valid_from,
        "factored": render_factored(f),
    }


def from_json(obj: dict) -> RationalFunctionN:
    return RationalFunctionN(
        PolynomialN(Fraction(c) for c in obj["numerator"]),
        PolynomialN(Fraction(c) for c in obj["denominator"]),
    )


@dataclass
class Request:
    matrix: PowerMatrix
    mode: str = "symbolic"
    method: str = "auto"
    eval_n: int | None = None
    mc_samples: int | None = None
    seed: int = 0
    output_format: str = "factored"
    unitary: bool = False

    def __post_init__(self):
        if self.mode not in ("symbolic", "eval", "verify"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode in ("eval", "verify") and self.eval_n is None:
            raise ValueError(f"{self.mode} mode needs an evaluation point N")
        if self.mode == "verify" and self.mc_samples is None:
            raise ValueError("verify mode needs a Monte Carlo sample count")
        if self.eval_n is not None and self.eval_n < 1:
            raise ValueError("N must be positive")
        if self.unitary and self.matrix.ncols != 2:
            raise ValueError("unitary mode takes exactly two columns, m : n")
        if self.unitary and self.mode == "verify":
            raise ValueError("there is no Monte Carlo oracle for U(N)")


def _symbolic(req: Request) -> tuple[RationalFunctionN, int]:
    m = req.matrix
    if req.unitary:
        mv = [row[0] for row in m.rows]
        nv = [row[1] for row in m.rows]
        return one_vector_unitary(mv, nv), max(1, m.support)
    return integrate(m, IntegratorConfig(method=req.method)), m.validity_bound


def _render(f: RationalFunctionN, fmt: str) -> str:
    return render_expanded(f) if fmt == "expanded" else render_factored(f)


def run(req: Request, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    f, valid_from = _symbolic(req)
    payload = to_json(f, valid_from)
    lines = [_render(f, req.output_format), f"valid for N >= {valid_from}"]
    status = 0

    if req.mode in ("eval", "verify"):
        if req.eval_n < valid_from:
            print(f"warning: N={req.eval_n} is below the validity bound {valid_from}", file=err)
        value = f.evaluate(req.eval_n)
        payload.update(N=req.eval_n, value=str(value))
        lines = [str(value)] if req.mode == "eval" else lines + [f"exact at N={req.eval_n}: {value}"]

    if req.mode == "verify":
        est = mc_moment(req.matrix, req.eval_n, req.mc_samples, req.seed)
        ok = est.agrees_with(value, N_SIGMA)
        status = 0 if ok else 1
        verdict = "PASS" if ok else "FAIL"
        payload.update(
            mcMean=est.mean, mcStandardError=est.standard_error,
            samples=est.samples, seed=est.seed, verdict=verdict,
        )
        lines += [
            f"monte carlo: {est.mean:.8g} +/- {est.standard_error:.3g}"
            f" ({est.samples} samples, seed {est.seed})",
            f"{verdict} (|z| = {abs(est.z_score(float(value))):.2f}, threshold {N_SIGMA:g})",
        ]

    if req.output_format == "json":
        print(json.dumps(payload), file=out)
    else:
        print("\n".join(lines), file=out)
    return status


def _read_matrix_arg(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="orthomoments",
        description="Exact Haar integral of a monomial over O(N) as a rational function of N.",
    )
    p.add_argument("--matrix", help="path, inline grid ('1 1; 1 1') or JSON; stdin if omitted")
    p.add_argument("--method", default="auto", choices=["auto", "recursion", "two-vector", "ullah"])
    p.add_argument("--eval", type=int, dest="eval_n", metavar="N", help="evaluate exactly at N")
    p.add_argument("--mc-samples", type=int, help="Monte Carlo check at --eval N with this many samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="output_format", default="factored",
                   choices=["factored", "expanded", "json"])
    p.add_argument("--unitary", action="store_true",
                   help="one-vector U(N) integral; the two columns are the powers of Re and Im parts")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    mode = "verify" if args.mc_samples is not None else ("eval" if args.eval_n is not None else "symbolic")
    try:
        req = Request(
            matrix=parse_matrix(_read_matrix_arg(args.matrix)),
            mode=mode,
            method=args.method,
            eval_n=args.eval_n,
            mc_samples=args.mc_samples,
            seed=args.seed,
            output_format=args.output_format,
            unitary=args.unitary,
        )
        return run(req)
    except (OrthoMomentsError, ValueError, OSError) as exc:
        print(f"orthomoments: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
