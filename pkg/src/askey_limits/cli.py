"""Command-line front end for coefficient tables, limit scans and verification.

Subcommands:

* coeffs          recurrence coefficients of a family or uniform point
* theorem-table   identify all 16 boundary specializations
* limit           convergence scan along a named limit preset
* oracle-compare  closed-form coefficients vs the moment-based oracle

Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.
Output is CSV (default) or versioned JSON ("schema": 1) on stdout; identical
configuration yields byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import uniform
from .families import FamilyId
from .families import family_coeffs
from .oracle import family_oracle
from .recurrence import DomainError, DegreeRangeError, RecurrenceCoefficients
from .uniform import (
    DEFAULT_FIT_TOL,
    JacobiInverseParams,
    InverseParams,
    LIMIT_PRESET_NAMES,
    convergence_scan,
    jacobi_uniform_recurrence,
    limit_preset,
    racah_uniform_recurrence,
    theorem_table,
)


@dataclass(frozen=True)
class RunConfig:
    precision_bits: int = 53
    n_max: int = 8
    tolerance: float = DEFAULT_FIT_TOL
    output_format: str = "csv"
    seed: int = 0

    def __post_init__(self):
        if self.precision_bits < 53:
            raise DomainError("precision_bits must be >= 53")
        if self.n_max < 0:
            raise DomainError("n_max must be >= 0")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")
        if self.output_format not in ("csv", "json"):
            raise DomainError("format must be csv or json")

    def as_dict(self) -> dict:
        return {
            "precision_bits": self.precision_bits,
            "n_max": self.n_max,
            "tolerance": self.tolerance,
            "format": self.output_format,
            "seed": self.seed,
        }


def _config(args) -> RunConfig:
    return RunConfig(
        precision_bits=args.precision_bits,
        n_max=args.n_max,
        tolerance=args.tol,
        output_format=args.format,
        seed=args.seed,
    )


def _emit_json(payload: dict) -> None:
    print(json.dumps({"schema": 1, **payload}, sort_keys=True))


def _parse_point_spec(spec: str):
    """A family text form, or 'jacobi-uniform:ia,ib' / 'racah-uniform:a,b,d,nu'."""
    head, _, body = spec.partition(":")
    head = head.strip().lower()
    if head == "jacobi-uniform":
        vals = [float(v) for v in body.split(",")]
        if len(vals) != 2:
            raise DomainError("jacobi-uniform expects two inverse parameters: ia,ib")
        return ("jacobi-uniform", JacobiInverseParams(*vals))
    if head == "racah-uniform":
        vals = [float(v) for v in body.split(",")]
        if len(vals) != 4:
            raise DomainError("racah-uniform expects four inverse parameters: a,b,d,nu")
        return ("racah-uniform", InverseParams(*vals))
    return ("family", FamilyId.parse(spec))


def cmd_coeffs(args) -> int:
    cfg = _config(args)
    kind, obj = _parse_point_spec(args.family)
    if kind == "jacobi-uniform":
        coeffs = jacobi_uniform_recurrence(obj, cfg.n_max, cfg.precision_bits)
        label = args.family
    elif kind == "racah-uniform":
        coeffs = racah_uniform_recurrence(obj, cfg.n_max, cfg.precision_bits)
        label = args.family
    else:
        coeffs = family_coeffs(obj, cfg.n_max)
        label = obj.text()
    rows = [
        {"n": n, "B": float(coeffs.b[n]), "C": None if n == 0 else float(coeffs.c[n])}
        for n in range(cfg.n_max + 1)
    ]
    if cfg.output_format == "json":
        _emit_json({"command": "coeffs", "family": label, "config": cfg.as_dict(), "rows": rows})
    else:
        print("n,B,C")
        for r in rows:
            c = "" if r["C"] is None else repr(r["C"])
            print(f"{r['n']},{r['B']!r},{c}")
    return 0


def cmd_theorem_table(args) -> int:
    cfg = _config(args)
    results = theorem_table(cfg.n_max, tol=cfg.tolerance, prec=cfg.precision_bits)
    if args.row is not None:
        wanted = args.row.strip()
        results = [r for r in results if r.row.row_id == wanted]
        if not results:
            known = ", ".join(r.row_id for r in uniform.THEOREM_ROWS)
            raise DomainError(f"unknown row {wanted!r}; known rows: {known}")
    rows = [
        {
            "row": r.row.row_id,
            "dimension": r.row.dimension,
            "target": r.target.text(),
            "rho": r.fit.rho,
            "sigma": r.fit.sigma,
            "residual": r.fit.residual,
            "passed": r.passed,
        }
        for r in results
    ]
    ok = all(r["passed"] for r in rows)
    if cfg.output_format == "json":
        _emit_json({
            "command": "theorem-table",
            "config": cfg.as_dict(),
            "rows": rows,
            "all_passed": ok,
        })
    else:
        print("row,dimension,target,rho,sigma,residual,passed")
        for r in rows:
            print(
                f"{r['row']},{r['dimension']},\"{r['target']}\","
                f"{r['rho']!r},{r['sigma']!r},{r['residual']!r},{str(r['passed']).lower()}"
            )
    return 0 if ok else 1


def cmd_limit(args) -> int:
    cfg = _config(args)
    preset = limit_preset(args.preset, cfg.n_max, alpha=args.alpha, steps=args.steps)
    scan = convergence_scan(preset.path, preset.boundary, preset.default_ts, cfg.n_max)
    rows = []
    for k, step in enumerate(scan.steps):
        rows.append({
            "t": step.t,
            "max_dev": step.max_dev,
            "max_dev_C": step.max_dev_c,
            "order": scan.orders[k - 1] if k > 0 else None,
            "dev_B": list(step.dev_b),
            "dev_C": list(step.dev_c),
        })
    if cfg.output_format == "json":
        _emit_json({
            "command": "limit",
            "preset": preset.name,
            "config": cfg.as_dict(),
            "steps": rows,
        })
    else:
        print("t,max_dev,max_dev_C,order")
        for r in rows:
            order = "" if r["order"] is None else repr(r["order"])
            print(f"{r['t']!r},{r['max_dev']!r},{r['max_dev_C']!r},{order}")
    return 0


def cmd_oracle_compare(args) -> int:
    cfg = _config(args)
    fid = FamilyId.parse(args.family)
    closed = family_coeffs(fid, cfg.n_max)
    oracle = family_oracle(fid, cfg.n_max, cfg.precision_bits)
    dev = 0.0
    for n in range(cfg.n_max + 1):
        dev = max(dev, _rel(closed.b[n], oracle.b[n]))
        if n >= 1:
            dev = max(dev, _rel(closed.c[n], oracle.c[n]))
    passed = dev <= cfg.tolerance
    if cfg.output_format == "json":
        _emit_json({
            "command": "oracle-compare",
            "family": fid.text(),
            "config": cfg.as_dict(),
            "max_relative_deviation": dev,
            "passed": passed,
        })
    else:
        print("family,n_max,max_relative_deviation,tolerance,passed")
        print(f"\"{fid.text()}\",{cfg.n_max},{dev!r},{cfg.tolerance!r},{str(passed).lower()}")
    return 0 if passed else 1


def _rel(x, y) -> float:
    return abs(float(x) - float(y)) / max(1.0, abs(float(x)), abs(float(y)))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-max", type=int, default=8, dest="n_max")
    p.add_argument("--tol", type=float, default=DEFAULT_FIT_TOL)
    p.add_argument("--precision-bits", type=int, default=53, dest="precision_bits")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="askey-limits",
        description="Recurrence coefficients, uniform limit transitions and "
                    "verification for the Askey tableau families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print a coefficient table")
    p.add_argument("family", help="family text form, jacobi-uniform:ia,ib or racah-uniform:a,b,d,nu")
    _add_common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("theorem-table", help="identify the 16 boundary specializations")
    p.add_argument("--row", help="restrict to one row id, e.g. d=inf")
    _add_common(p)
    p.set_defaults(func=cmd_theorem_table)

    p = sub.add_parser("limit", help="convergence scan along a limit preset")
    p.add_argument("--preset", required=True, choices=LIMIT_PRESET_NAMES)
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--alpha", type=float, default=1.0,
                   help="fixed parameter of presets that keep one parameter finite")
    _add_common(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("oracle-compare", help="closed forms vs the moment oracle")
    p.add_argument("family", help="family text form, e.g. jacobi:alpha=0,beta=0")
    _add_common(p)
    p.set_defaults(func=cmd_oracle_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, DegreeRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
