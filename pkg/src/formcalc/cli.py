"""Command-line front end.

Exit codes: 0 success, 1 parse or usage error, 2 domain error, 3 precondition
failure, 4 a ``verify`` identity failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dolbeault, homotopy
from .errors import DomainError, ParseError, PreconditionError
from .forms import Form, eval_at_base, ext_d
from .formatting import format_scalar, format_text, to_json
from .parsing import SessionConfig, parse, parse_point
from .suite import format_table, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _session_options() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    g = p.add_argument_group("session")
    g.add_argument("--mode", choices=("real", "complex"), default="real")
    g.add_argument("--dim", type=int, default=None, help="dimension n (complex: number of z coordinates)")
    g.add_argument("--base", default=None, help="base point, e.g. 0,1/2 or 1+2i,0 (use --base=-1,0 for a leading minus)")
    g.add_argument("--output", choices=("text", "json"), default="text")
    g.add_argument("--paired", action="store_true", help="real coordinates named x1,y1,x2,y2,...")
    g.add_argument("--seed", type=int, default=0)
    return p


UNARY = {
    "d": ("exterior derivative", ext_d),
    "h": ("homotopy operator H", homotopy.homotopy_H),
    "potential": ("primitive H(omega) of a closed form", homotopy.potential),
    "del": ("Dolbeault del (complex mode)", dolbeault.del_),
    "delbar": ("Dolbeault delbar (complex mode)", dolbeault.delbar),
    "hplus": ("homotopy operator H+ (complex mode)", dolbeault.h_plus),
    "hminus": ("homotopy operator H- (complex mode)", dolbeault.h_minus),
}


def build_parser() -> argparse.ArgumentParser:
    common = _session_options()
    parser = _Parser(prog="formcalc", description="Exact exterior calculus with the radial homotopy operator.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (help_text, _) in UNARY.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("expr", help="form expression, or - to read stdin")
    for name, help_text in (("decompose", "exact / antiexact / constant parts"),
                            ("classify", "eigen-classification under Hd - dH"),
                            ("invariance", "eight-term complex invariance formula")):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("expr")
    sp = sub.add_parser("eval", parents=[common], help="evaluate coefficients at a point")
    sp.add_argument("expr")
    sp.add_argument("--at", required=True, help="point, same syntax as --base")
    sp = sub.add_parser("verify", parents=[common], help="run the randomized identity suite")
    sp.add_argument("--numeric", action="store_true", help="also run the quadrature / finite-difference oracles")
    sp.add_argument("--count", type=int, default=100)
    return parser


def _config(args) -> SessionConfig:
    base = parse_point(args.base) if args.base else None
    dim = args.dim
    if dim is None:
        dim = len(base) if base is not None else 1
    if dim < 1:
        raise DomainError("--dim must be >= 1")
    return SessionConfig(mode=args.mode, dim=dim, base=base, output=args.output, paired=args.paired)


def _read_expr(expr: str) -> str:
    return sys.stdin.read().strip() if expr == "-" else expr


def _emit(obj_text: str, obj_json, cfg: SessionConfig, out):
    if cfg.output == "json":
        out.write(json.dumps(obj_json) + "\n")
    else:
        out.write(obj_text + "\n")


def _fmt(f: Form, cfg: SessionConfig) -> str:
    return format_text(f, cfg.paired)


def _run(args, out) -> int:
    if args.command == "verify":
        results = run_suite(args.count, args.seed, args.numeric)
        ok = all(r.passed for r in results)
        if args.output == "json":
            out.write(json.dumps([{"identity": r.name, "cases": r.cases, "failures": r.failures}
                                  for r in results]) + "\n")
        else:
            out.write(format_table(results) + "\n")
            out.write(("all identities hold" if ok else "IDENTITY FAILURES") + "\n")
        return EXIT_OK if ok else EXIT_VERIFY

    cfg = _config(args)
    omega = parse(_read_expr(args.expr), cfg)
    cmd = args.command

    if cmd in UNARY:
        result = UNARY[cmd][1](omega)
        _emit(_fmt(result, cfg), to_json(result), cfg, out)
    elif cmd == "decompose":
        r = homotopy.decompose(omega)
        parts = {"exact": r.exact, "antiexact": r.antiexact, "constant": r.constant}
        _emit("\n".join(f"{k}: {_fmt(v, cfg)}" for k, v in parts.items()),
              {k: to_json(v) for k, v in parts.items()}, cfg, out)
    elif cmd == "classify":
        v = homotopy.oscillator_classify(omega)
        lines = [str(v)]
        if v.witness is not None:
            lines.append(f"residual (lambda={v.lam:+d}): {_fmt(v.witness, cfg)}")
        _emit("\n".join(lines), {
            "kind": v.kind,
            "eigenvalue": v.eigenvalue,
            "lambda": v.lam,
            "witness": to_json(v.witness) if v.witness is not None else None,
        }, cfg, out)
    elif cmd == "invariance":
        terms = dolbeault.invariance_terms(omega)
        total = dolbeault.invariance_sum(terms)
        holds = total == omega - eval_at_base(omega)
        lines = [f"{k}: {_fmt(v, cfg)}" for k, v in terms.items()]
        lines.append(f"sum: {_fmt(total, cfg)}")
        lines.append(f"sum == omega - s*omega: {'true' if holds else 'false'}")
        _emit("\n".join(lines), {
            "terms": {k: to_json(v) for k, v in terms.items()},
            "sum": to_json(total),
            "holds": holds,
        }, cfg, out)
    elif cmd == "eval":
        point = parse_point(args.at)
        values = omega.at(point)
        const = Form(omega.space, values, omega.degree)
        _emit(_fmt(const, cfg), {"point": [format_scalar(c) for c in point], "value": to_json(const)}, cfg, out)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    try:
        return _run(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except PreconditionError as exc:
        msg = f"precondition failed: {exc}"
        if isinstance(exc.residual, Form):
            msg += f"; residual d(omega) = {format_text(exc.residual, getattr(args, 'paired', False))}"
        err.write(msg + "\n")
        return EXIT_PRECONDITION


def run(argv=None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
