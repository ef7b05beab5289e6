"""Command line entry point.

Exit codes: 0 success, 1 validation failure, 2 parse error or bad usage,
3 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, verify
from .algebra_io import AlgebraParseError, AlgebraValidationError, emit_algebra, parse_algebra
from .catalog import UnknownAlgebraError, algebra_from_key
from .multiplier import multiplier_dim, s_invariant, stem_cover, t_invariant
from .superalg import (
    LieSuperAlgebra,
    NotNilpotentError,
    center,
    derived_subalgebra,
    is_nilpotent,
    lower_central_series,
    nilpotency_class,
    upper_central_series,
    validate,
)

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_MISMATCH = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def load(target: str, check: bool = True) -> LieSuperAlgebra:
    """A path to an algebra file, or a catalog key such as ``H(1,1)+A(0|1)``."""
    path = Path(target)
    if path.is_file():
        try:
            return parse_algebra(path.read_text(encoding="utf-8"), check=check)
        except AlgebraParseError as exc:
            raise CliError(f"{target}: {exc}", EXIT_PARSE) from exc
        except AlgebraValidationError as exc:
            raise CliError(f"{target}: {exc}", EXIT_INVALID) from exc
    try:
        return algebra_from_key(target)
    except UnknownAlgebraError as exc:
        raise CliError(f"{target}: not a file and not a catalog key", EXIT_PARSE) from exc


def _subspace_line(label: str, U) -> str:
    return f"{label}: dims {U.dims}" + (
        "  basis " + ", ".join(U.ambient.format_vector(v) for v in U.basis) if U.dim else ""
    )


def cmd_info(args) -> int:
    L = load(args.algebra)
    print(f"name: {L.name or '-'}")
    print(f"dims: {L.dims}")
    print(_subspace_line("center", center(L)))
    print(_subspace_line("derived", derived_subalgebra(L)))
    print("lower central series dims: " + ", ".join(str(U.dims) for U in lower_central_series(L)))
    print("upper central series dims: " + ", ".join(str(U.dims) for U in upper_central_series(L)))
    if is_nilpotent(L):
        print(f"nilpotent: yes, class {nilpotency_class(L)}")
    else:
        print("nilpotent: no")
    return EXIT_OK


def cmd_multiplier(args) -> int:
    L = load(args.algebra)
    M = multiplier_dim(L)
    data = {"dims": str(L.dims), "multiplier": M.total, "graded": str(M.graded),
            "t": t_invariant(L, M.total), "s": s_invariant(L, M.total)}
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(f"dim M(L) = {data['multiplier']}  graded {data['graded']}")
        print(f"t(L) = {data['t']}")
        print(f"s(L) = {data['s']}")
    return EXIT_OK


def cmd_cover(args) -> int:
    L = load(args.algebra)
    sc = stem_cover(L)
    names = sc.cover.names
    kernel = [names[i] for i, p in enumerate(sc.projection) if p is None]
    text = emit_algebra(sc.cover, kernel=kernel)
    if args.out:
        Path(args.out).write_text(text)
        print(f"cover of dims {sc.cover.dims} with kernel {sc.kernel.dims} written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_catalog(args) -> int:
    for e in catalog.all_entries():
        ex = e.expected
        claims = []
        if ex is not None and ex.multiplier_total is not None:
            claims.append(f"M={ex.multiplier_total}")
        if ex is not None and ex.s_value is not None:
            claims.append(f"s={ex.s_value}")
        regime = f" [{e.regime}]" if e.regime else ""
        print(f"{e.key:<24} {str(e.algebra.dims):<8} {' '.join(claims)}{regime}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify.run_all()
    if args.json:
        Path(args.json).write_text(report.to_json())
    if args.failures_only:
        for r in report.failures:
            print(f"FAIL {r.id}: expected {r.expected}, computed {r.computed}  [{r.citation}]")
        s = report.summary
        print(f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed")
    else:
        print(report.to_table())
    return EXIT_OK if report.summary["failed"] == 0 else EXIT_MISMATCH


def cmd_validate(args) -> int:
    L = load(args.algebra, check=False)
    report = validate(L)
    if report.ok:
        print(f"ok: {L.name or args.algebra} dims {L.dims}")
        return EXIT_OK
    for v in report.violations:
        print(v)
    return EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superlie", description="Exact computations with finite dimensional Lie superalgebras."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    target_help = "algebra file (JSON) or catalog key, e.g. 'H_2' or 'H(1,0)+A(0|1)'"

    p = sub.add_parser("info", help="dims, center, derived algebra, central series")
    p.add_argument("algebra", help=target_help)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("multiplier", help="Schur multiplier and the t, s invariants")
    p.add_argument("algebra", help=target_help)
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("cover", help="construct a stem cover")
    p.add_argument("algebra", help=target_help)
    p.add_argument("--out", help="write the cover here instead of stdout")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("catalog", help="list the built-in algebras")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-paper", help="recompute every tabulated claim")
    p.add_argument("--json", metavar="FILE", help="also write the JSON report to FILE")
    p.add_argument("--failures-only", action="store_true", help="print only failing checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("validate", help="check grading, skew-symmetry and Jacobi")
    p.add_argument("algebra", help=target_help)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotNilpotentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
