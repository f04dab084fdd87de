"""Command-line front end.

Exit codes: 0 success or pass, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import theorems
from .expr import ParseError, eval_poly, eval_steenrod, eval_twisted, kind_of, parse
from .fpmod import ModulePresentation, PresentationError, realize
from .steenrod import AlgebraId, basis as steenrod_basis, coproduct, render_tensor
from .steenrod import dimension_series as steenrod_series
from .twisted import (
    TwistedSubalgebraId,
    coproduct_twisted,
    phi,
    phi_extended,
    psi,
    render_twisted_tensor,
    twisted_basis,
)
from .twisted import expected_dimension_series as twisted_series
from .unstable import K, BOType, basis_elements
from .unstable import dimension_series as poly_series

ALGEBRAS = ("A", "A1", "twisted-A", "twisted-A1", "K", "BO")
VERIFY_NAMES = tuple(sorted(theorems.CHECKS)) + ("all",)


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _bo(args) -> BOType:
    n = args.vars if args.vars is not None else args.max_degree
    return BOType(max(n, 1))


def _value(text: str, args):
    """Evaluate an expression in the context its atoms select."""
    node = parse(text)
    kind = kind_of(node)
    if kind == "steenrod":
        return eval_steenrod(node)
    if kind == "twisted":
        return eval_twisted(node)
    if kind == "k":
        return eval_poly(node, K)
    return eval_poly(node, _bo(args))


# ------------------------------------------------------------------ commands


def cmd_adem(args) -> int:
    x = eval_steenrod(parse(args.expr))
    _emit(args, str(x), {"input": args.expr, "result": str(x)})
    return 0


def cmd_mul(args) -> int:
    nodes = [parse(e) for e in args.exprs]
    kinds = {kind_of(n) for n in nodes}
    if len(kinds) == 1 and kinds != {"twisted"}:
        values = [_value(e, args) for e in args.exprs]
    elif kinds <= {"twisted", "steenrod", "k"}:
        values = [eval_twisted(n) for n in nodes]
    else:
        raise UsageError("cannot multiply elements of different algebras")
    out = values[0]
    for v in values[1:]:
        out = out * v
    _emit(args, str(out), {"input": list(args.exprs), "result": str(out)})
    return 0


def cmd_coprod(args) -> int:
    node = parse(args.expr)
    if kind_of(node) == "steenrod":
        out = render_tensor(coproduct(eval_steenrod(node)))
    elif kind_of(node) in ("twisted", "k"):
        out = render_twisted_tensor(coproduct_twisted(eval_twisted(node)))
    else:
        raise UsageError("coproduct is defined on A and the twisted algebra")
    _emit(args, out, {"input": args.expr, "result": out})
    return 0


def cmd_phi(args) -> int:
    node = parse(args.expr)
    if kind_of(node) == "steenrod":
        out = phi(eval_steenrod(node))
    else:
        out = phi_extended(eval_twisted(node))
    _emit(args, str(out), {"input": args.expr, "result": str(out)})
    return 0


def cmd_psi(args) -> int:
    out = psi(eval_twisted(parse(args.expr)))
    _emit(args, str(out), {"input": args.expr, "result": str(out)})
    return 0


def _basis(alg: str, d: int, args) -> list[str]:
    if alg == "A":
        return [str(x) for x in steenrod_basis(AlgebraId.FullA, d)]
    if alg == "A1":
        return [str(x) for x in steenrod_basis(AlgebraId.A1, d)]
    if alg == "twisted-A":
        return [str(x) for x in twisted_basis(TwistedSubalgebraId.FullTwisted, d)]
    if alg == "twisted-A1":
        return [str(x) for x in twisted_basis(TwistedSubalgebraId.TwistedA1, d)]
    if alg == "K":
        return [str(x) for x in basis_elements(K, d)]
    return [str(x) for x in basis_elements(_bo(args), d)]


def cmd_basis(args) -> int:
    if args.degree < 0:
        raise UsageError("degree must be >= 0")
    items = _basis(args.algebra, args.degree, args)
    _emit(args, "\n".join(items), {"algebra": args.algebra, "degree": args.degree, "basis": items})
    return 0


def _series(alg: str, n: int, args):
    if alg == "A":
        return steenrod_series(AlgebraId.FullA, n)
    if alg == "A1":
        return steenrod_series(AlgebraId.A1, n)
    if alg == "twisted-A":
        return twisted_series(TwistedSubalgebraId.FullTwisted, n)
    if alg == "twisted-A1":
        return twisted_series(TwistedSubalgebraId.TwistedA1, n)
    if alg == "K":
        return poly_series(K, n)
    return poly_series(_bo(args), n)


def cmd_series(args) -> int:
    s = _series(args.algebra, args.max_degree, args)
    _emit(args, " ".join(str(x) for x in s.dims),
          {"algebra": args.algebra, "max_degree": args.max_degree, "dims": list(s.dims)})
    return 0


def cmd_realize(args) -> int:
    try:
        with open(args.path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read presentation: %s" % exc) from None
    p = ModulePresentation.from_json(data)
    r = realize(p, args.max_degree)
    payload = r.to_json(with_basis=args.basis, with_actions=args.actions)
    lines = ["dims: " + " ".join(str(x) for x in payload["dims"])]
    if args.basis:
        for d in range(args.max_degree + 1):
            lines.append("%d: %s" % (d, ", ".join(r.basis_labels(d))))
    if args.actions:
        for name, tables in payload["actions"].items():
            lines.append("%s: %d tables" % (name, len(tables)))
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_verify(args) -> int:
    if args.vars is not None and args.vars < args.max_degree and args.name in ("thom", "all"):
        raise UsageError("--vars must be at least --max-degree")
    if args.name == "all":
        reports = theorems.run_all(args.max_degree, args.vars)
    else:
        reports = [theorems.run_check(args.name, args.max_degree, args.vars)]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = reports[0].to_json() if args.name != "all" else [r.to_json() for r in reports]
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(r.to_text() for r in reports))
        if args.name == "all":
            print("overall: %s" % ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def cmd_census(args) -> int:
    if args.max_degree > theorems.BSPIN_MAX_DEGREE:
        raise UsageError("census is limited to degree %d" % theorems.BSPIN_MAX_DEGREE)
    try:
        entries, rep = theorems.abp_census(args.max_degree)
    except theorems.NegativeResidual as exc:
        print("negative residual: %s" % exc, file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps({"entries": [e.to_json() for e in entries], "report": rep.to_json()}, indent=2))
    else:
        for e in entries:
            j = "(" + ",".join(map(str, e.J)) + ")" if e.J else "()"
            extra = " x%d" % e.multiplicity if e.kind == "Free" else ""
            print("%-12s J=%-10s nJ=%d%s" % (e.kind, j, e.nJ, extra))
        print(rep.to_text())
    return 0 if rep.passed else 1


def cmd_conjecture(args) -> int:
    rep = theorems.explore_conjecture(args.max_degree)
    _emit(args, rep.to_text(), rep.to_json())
    return 0


def cmd_schema(args) -> int:
    print(json.dumps(theorems.REPORT_SCHEMA, indent=2))
    return 0


# -------------------------------------------------------------------- parser


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text) from None
    if n < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=_nonneg, default=16, help="truncation degree (default 16)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--vars", type=_nonneg, default=None, help="BO variable bound (default: max degree)")

    p = argparse.ArgumentParser(prog="twisted-steenrod", description="Twisted Steenrod algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("adem", parents=[common], help="admissible normal form of a Steenrod expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_adem)

    s = sub.add_parser("mul", parents=[common], help="product of two or more expressions")
    s.add_argument("exprs", nargs="+")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("coprod", parents=[common], help="coproduct in A or the twisted algebra")
    s.add_argument("expr")
    s.set_defaults(func=cmd_coprod)

    s = sub.add_parser("phi", parents=[common], help="phi on A(1), or its extension to twisted A(1)")
    s.add_argument("expr")
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("psi", parents=[common], help="psi on twisted A(1)")
    s.add_argument("expr")
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("basis", parents=[common], help="basis in one degree")
    s.add_argument("algebra", choices=ALGEBRAS)
    s.add_argument("degree", type=_nonneg)
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("series", parents=[common], help="dimension series")
    s.add_argument("algebra", choices=ALGEBRAS)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("realize", parents=[common], help="realize a module presentation (JSON file)")
    s.add_argument("path")
    s.add_argument("--basis", action="store_true", help="include basis labels")
    s.add_argument("--actions", action="store_true", help="include action tables")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("verify", parents=[common], help="run a named verification")
    s.add_argument("name", choices=VERIFY_NAMES)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", parents=[common], help="summand census of the twisted Thom spectrum")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("conjecture", parents=[common], help="explore both readings of the conjectured quotients")
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("schema", help="print the JSON schema of check reports")
    s.set_defaults(func=cmd_schema, format="json")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, PresentationError, UsageError, ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
