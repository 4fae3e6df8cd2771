"""Command-line entry point.

Exit status: 0 on success, 1 on usage, parse or bound errors, 2 when a
verification suite reports a failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .checks import SUITES, run_suite
from .combinatorics import (
    format_partition,
    format_seq,
    parse_partition,
    parse_permutation,
    parse_surjection,
)
from .config import Bounds
from .errors import ArityError, BoundExceeded
from .ext import FAMILIES, ExtQuery, ext_dim, ext_table, table_to_csv
from .group_algebra import GroupAlgebraElement, format_element, young_idempotent
from .linear import format_rational
from .partition_cat import LambdaMorphism, odot, p_element, p_element_recursive, star_compose
from .prop import BASES, EMorphism, act, compose, sandwich, tensor

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """``ArgumentParser`` that raises instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=None, help="worker processes for S_m sums and tables")
    p.add_argument("--max-arity", type=int, default=None, help="ceiling on Ext arities")
    p.add_argument("--max-star-arity", type=int, default=None, help="ceiling on the middle arity of *")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="scomprop", description="Exact computations in the free prop on sCom.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_, description=help_)

    p = add("compose", "composite x <> y of two generators")
    p.add_argument("--basis", choices=BASES, default="nu")
    p.add_argument("--f", required=True, help="upper surjection, e.g. 1,2,2")
    p.add_argument("--h", required=True, help="lower surjection, e.g. 1,1,2,3")

    p = add("tensor", "monoidal product of two generators")
    p.add_argument("--basis", choices=BASES, default="nu")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)

    p = add("act", "two-sided permutation action sigma . x . tau")
    p.add_argument("--basis", choices=BASES, default="nu")
    p.add_argument("--f", default=None, help="surjection acted on (default: the identity)")
    p.add_argument("--left", default="id", help="permutation or 'id'")
    p.add_argument("--right", default="id", help="permutation or 'id'")

    p = add("sandwich", "phi(e_mu) <> nu_f <> phi(e_lambda)")
    p.add_argument("--basis", choices=BASES, default="nu")
    p.add_argument("--f", required=True)
    p.add_argument("--left-idem", default="id", help="partition or 'id'")
    p.add_argument("--right-idem", default="id", help="partition or 'id'")
    p.add_argument("--filling", choices=("row", "column"), default="row")

    p = add("idempotent", "the Young idempotent e_lambda in K[S_n]")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--filling", choices=("row", "column"), default="row")

    p = add("lambda-compose", "rho_l * rho_mu in the partition quotient")
    p.add_argument("--l", required=True)
    p.add_argument("--mu", required=True)

    p = add("lambda-tensor", "rho_l (.) rho_mu in the partition quotient")
    p.add_argument("--l", required=True)
    p.add_argument("--mu", required=True)

    p = add("pmn", "the averaged element P_{m,n}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "recursive"), default="closed")

    p = add("ext-dim", "dim Ext(S_mu, S_lambda) via idempotent sandwiches")
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--filling", choices=("row", "column"), default="row")
    p.add_argument("--show-basis", action="store_true")

    p = add("ext-table", "Ext dimensions for a whole family")
    p.add_argument("--family", choices=FAMILIES, default="simple")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, default=None, help="defaults to --max-m")

    p = add("verify", "run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--max", type=int, default=None, help="size bound (suite default if omitted)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=1000, help="random instances for nu-mu-oracle")
    return parser


# -- formatting -------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _morphism_text(x) -> str:
    kind = "E" if isinstance(x, EMorphism) else "E_Lambda"
    return f"{kind}({x.m},{x.n}) degree {x.degree}: {x}"


def _emit_morphism(x, fmt: str) -> str:
    return _dump(x.to_json()) if fmt == "json" else _morphism_text(x)


def _element_json(a: GroupAlgebraElement) -> dict:
    return {"n": a.n, "terms": [{"key": format_seq(s), "coeff": format_rational(c)} for s, c in a.items()]}


# -- commands ---------------------------------------------------------------


def _generator(text: str, basis: str) -> EMorphism:
    return EMorphism.generator(parse_surjection(text), basis)


def _young(text: str, filling: str, bounds: Bounds) -> GroupAlgebraElement:
    lam = parse_partition(text)
    if sum(lam) > bounds.max_arity:
        raise BoundExceeded(f"e[{format_partition(lam)}] exceeds the work ceiling {bounds.max_arity}"
                            " (raise it with --max-arity or SCOMPROP_MAX_ARITY)")
    return young_idempotent(lam, filling)


def _idem(text: str, filling: str, bounds: Bounds) -> GroupAlgebraElement | None:
    return None if text.strip() == "id" else _young(text, filling, bounds)


def cmd_compose(args, bounds):
    return _emit_morphism(compose(_generator(args.f, args.basis), _generator(args.h, args.basis)), args.format)


def cmd_tensor(args, bounds):
    return _emit_morphism(tensor(_generator(args.f, args.basis), _generator(args.g, args.basis)), args.format)


def cmd_act(args, bounds):
    sizes = [len(parse_permutation(t)) for t in (args.left, args.right) if t.strip() != "id"]
    if args.f is None:
        if len(set(sizes)) > 1:
            raise ArityError("without --f both permutations must have the same size")
        if not sizes:
            raise UsageError("act needs --f or at least one non-identity permutation")
        x = EMorphism.identity(sizes[0], args.basis)
    else:
        x = _generator(args.f, args.basis)
    sigma = None if args.left.strip() == "id" else parse_permutation(args.left)
    tau = None if args.right.strip() == "id" else parse_permutation(args.right)
    return _emit_morphism(act(sigma, x, tau), args.format)


def cmd_sandwich(args, bounds):
    x = _generator(args.f, args.basis)
    out = sandwich(_idem(args.left_idem, args.filling, bounds), x, _idem(args.right_idem, args.filling, bounds))
    return _emit_morphism(out, args.format)


def cmd_idempotent(args, bounds):
    lam = parse_partition(args.lam)
    e = _young(args.lam, args.filling, bounds)
    if args.format == "json":
        return _dump({"lambda": format_partition(lam), **_element_json(e)})
    return f"e[{format_partition(lam)}] = {format_element(e)}"


def cmd_lambda_compose(args, bounds):
    x = LambdaMorphism.rho(parse_partition(args.l))
    y = LambdaMorphism.rho(parse_partition(args.mu))
    return _emit_morphism(star_compose(x, y, bounds), args.format)


def cmd_lambda_tensor(args, bounds):
    x = LambdaMorphism.rho(parse_partition(args.l))
    y = LambdaMorphism.rho(parse_partition(args.mu))
    return _emit_morphism(odot(x, y), args.format)


def cmd_pmn(args, bounds):
    if args.method == "closed":
        return _emit_morphism(p_element(args.m, args.n), args.format)
    return _emit_morphism(p_element_recursive(args.m, args.n, bounds), args.format)


def cmd_ext_dim(args, bounds):
    q = ExtQuery(parse_partition(args.mu), parse_partition(args.lam))
    res = ext_dim(q, bounds, args.filling)
    labels = {"mu": format_partition(q.mu), "lambda": format_partition(q.lam)}
    if args.format == "json":
        out = res.to_json(**labels)
        if args.show_basis:
            out["basis"] = [b.to_json() for b in res.basis]
        return _dump(out)
    lines = [f"dim Ext^{res.degree}(S[{labels['mu']}], S[{labels['lambda']}]) = {res.dimension}"]
    if args.show_basis:
        lines.extend(f"  {b}" for b in res.basis)
    return "\n".join(lines)


def cmd_ext_table(args, bounds):
    rows = ext_table(args.max_m, args.max_m if args.max_n is None else args.max_n, args.family, bounds)
    if args.format == "csv":
        return table_to_csv(rows).rstrip("\n")
    if args.format == "json":
        return _dump(rows)
    return "\n".join(f"m={r['m']} n={r['n']} mu={r['mu']} lambda={r['lambda']} "
                     f"degree={r['degree']} dim={r['dimension']}" for r in rows)


COMMANDS = {
    "compose": cmd_compose,
    "tensor": cmd_tensor,
    "act": cmd_act,
    "sandwich": cmd_sandwich,
    "idempotent": cmd_idempotent,
    "lambda-compose": cmd_lambda_compose,
    "lambda-tensor": cmd_lambda_tensor,
    "pmn": cmd_pmn,
    "ext-dim": cmd_ext_dim,
    "ext-table": cmd_ext_table,
}


def _verify(args, bounds, out) -> int:
    report = run_suite(args.suite, args.max, bounds, seed=args.seed, random_count=args.random)
    if args.format == "json":
        out.write(_dump({"suite": args.suite, "passed": report.passed, "checks": [
            {"name": c.name, "passed": c.passed, "cases": c.cases, "counterexample": c.counterexample}
            for c in report.checks]}) + "\n")
    else:
        out.write("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.format == "csv" and args.command != "ext-table":
            raise UsageError("scomprop: error: --format csv is only available for ext-table")
        bounds = Bounds.from_env(max_arity=args.max_arity, max_star_arity=args.max_star_arity, jobs=args.jobs)
        if args.command == "verify":
            return _verify(args, bounds, out)
        out.write(COMMANDS[args.command](args, bounds) + "\n")
        return EXIT_OK
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (ValueError, ArityError, BoundExceeded) as exc:
        err.write(f"scomprop: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE


def main() -> None:
    sys.exit(run())
