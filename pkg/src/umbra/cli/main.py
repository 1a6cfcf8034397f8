"""``umbra`` command-line entry point."""
from __future__ import annotations

import argparse
import io
import sys
from contextlib import redirect_stderr
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .. import classical, identities, series
from ..algebra import Polynomial, fmt_rational, format_poly, parse_rational, poly_eval
from ..config import DEFAULT
from ..errors import UmbraError
from ..sheffer import expand_in_sheffer, named_basis
from .emit import FORMATS, OutputDoc, latex_family, latex_poly, latex_rational, latex_terms
from .parser import ParseError, lower, parse_expr

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandResult:
    doc: Optional[OutputDoc]
    status: int
    diagnostic: str = ""


class _UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except UmbraError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--trunc", type=_positive, default=DEFAULT.trunc, help="series truncation")
    common.add_argument("--seed", type=int, default=DEFAULT.seed, help="random-test seed")

    parser = _Parser(prog="umbra", description="Exact umbral calculus for Bernoulli and Euler polynomials.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("bernoulli", parents=[common], help="B_n(x) or B_n^(r)(x)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg)
    p.add_argument("--at", type=_rational)

    p = sub.add_parser("euler", parents=[common], help="E_n(x)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--at", type=_rational)

    p = sub.add_parser("numbers", parents=[common], help="table of family numbers")
    p.add_argument("--family", choices=("bernoulli", "euler", "bernoulli-order"), required=True)
    p.add_argument("--r", type=_nonneg)
    p.add_argument("--upto", type=_nonneg, required=True)

    p = sub.add_parser("expand", parents=[common], help="expand a polynomial in a family basis")
    p.add_argument("--basis", required=True, help="bernoulli | bernoulli-order (with --r) | euler")
    p.add_argument("--r", type=_positive)
    p.add_argument("expr")

    p = sub.add_parser("pairing", parents=[common], help="<f(t) | p(x)>")
    p.add_argument("--series", required=True, help="named series or comma-separated coefficients c_0,c_1,...")
    p.add_argument("expr")

    p = sub.add_parser("verify", parents=[common], help="check every identity")
    p.add_argument("--max-n", type=_nonneg, default=12)
    p.add_argument("--max-r", type=_positive, default=4)
    return parser


def _parse_poly(src: str) -> Polynomial:
    return lower(parse_expr(src))


def _poly_doc(fmt: str, kind: str, n: int, r: Optional[int], poly: Polynomial, at: Optional[Fraction]) -> OutputDoc:
    payload = {"family": "bernoulli" if kind == "B" else "euler", "n": n}
    if r is not None:
        payload["r"] = r
    if at is None:
        payload["coeffs"] = [fmt_rational(c) for c in poly.coeffs]
        payload["poly"] = format_poly(poly)
        return OutputDoc(
            fmt,
            payload,
            text=lambda d: d["poly"],
            latex=lambda d: f"{latex_family(kind, n, r)} = {latex_poly(poly)}",
        )
    value = poly_eval(poly, at)
    payload["at"] = fmt_rational(at)
    payload["value"] = fmt_rational(value)
    return OutputDoc(
        fmt,
        payload,
        text=lambda d: d["value"],
        latex=lambda d: f"{latex_family(kind, n, r, latex_rational(at))} = {latex_rational(value)}",
    )


def _cmd_bernoulli(args) -> CommandResult:
    poly = classical.bernoulli_poly(args.n) if args.r is None else classical.bernoulli_poly_order(args.n, args.r)
    return CommandResult(_poly_doc(args.format, "B", args.n, args.r, poly, args.at), EXIT_OK)


def _cmd_euler(args) -> CommandResult:
    return CommandResult(_poly_doc(args.format, "E", args.n, None, classical.euler_poly(args.n), args.at), EXIT_OK)


def _cmd_numbers(args) -> CommandResult:
    if args.family == "bernoulli":
        values, sym = [classical.bernoulli_number(n) for n in range(args.upto + 1)], "B_{%d}"
    elif args.family == "euler":
        values, sym = [classical.euler_number(n) for n in range(args.upto + 1)], "E_{%d}"
    else:
        if args.r is None:
            raise _UsageError("umbra numbers: --family bernoulli-order needs --r")
        values = [classical.bernoulli_number_order(n, args.r) for n in range(args.upto + 1)]
        sym = "B_{%d}^{(" + str(args.r) + ")}"
    payload = {"family": args.family, "values": [fmt_rational(v) for v in values]}
    if args.family == "bernoulli-order":
        payload["r"] = args.r
    return CommandResult(
        OutputDoc(
            args.format,
            payload,
            text=lambda d: "\n".join(f"{n} {v}" for n, v in enumerate(d["values"])),
            latex=lambda d: " \\\\\n".join(f"{sym % n} = {latex_rational(v)}" for n, v in enumerate(values)),
        ),
        EXIT_OK,
    )


def _resolve_basis(spec: str, r: Optional[int]):
    name, _, rtext = spec.partition(":")
    if rtext:
        if r is not None:
            raise _UsageError("umbra expand: give r either as --r or as basis suffix, not both")
        r = _positive(rtext)
    if name == "bernoulli-order":
        if r is None:
            raise _UsageError("umbra expand: --basis bernoulli-order needs --r")
        return name, r
    if name in ("bernoulli", "euler"):
        if r is not None:
            raise _UsageError(f"umbra expand: basis {name} takes no r")
        return name, None
    raise _UsageError(f"umbra expand: unknown basis {spec!r}")


def _cmd_expand(args) -> CommandResult:
    name, r = _resolve_basis(args.basis, args.r)
    p = _parse_poly(args.expr)
    trunc = max(args.trunc, p.degree if p.coeffs else 0)
    if name == "bernoulli":
        coeffs = identities.expand_bernoulli_basis(p).coeffs
        atom, sym = (lambda k: f"B({k})"), (lambda k: latex_family("B", k))
    elif name == "bernoulli-order":
        coeffs = expand_in_sheffer(p, named_basis(name, r, trunc)).coeffs
        atom, sym = (lambda k: f"B({k}, {r})"), (lambda k: latex_family("B", k, r))
    else:
        coeffs = expand_in_sheffer(p, named_basis(name, None, trunc)).coeffs
        atom, sym = (lambda k: f"E({k})"), (lambda k: latex_family("E", k))
    payload = {"basis": name}
    if r is not None:
        payload["r"] = r
    payload["coeffs"] = [fmt_rational(c) for c in coeffs]

    def text(d):
        terms = []
        for k, c in enumerate(coeffs):
            if not c:
                continue
            mag = abs(c)
            body = atom(k) if mag == 1 else f"{fmt_rational(mag)}*{atom(k)}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    return CommandResult(
        OutputDoc(
            args.format,
            payload,
            text=text,
            latex=lambda d: latex_terms((c, sym(k)) for k, c in enumerate(coeffs)),
        ),
        EXIT_OK,
    )


_NAMED_SERIES = {
    "one": lambda y, n: series.one(n),
    "t": lambda y, n: series.t_series(n),
    "exp": lambda y, n: series.series_exp_linear(y, n),
    "exp-minus-one": lambda y, n: series.exp_minus_one(y, n),
    "integral": lambda y, n: series.integral_series(y, n),
    "bernoulli": lambda y, n: series.bernoulli_g(n),
    "bernoulli-inverse": lambda y, n: series.series_reciprocal(series.bernoulli_g(n)),
    "euler": lambda y, n: series.euler_g(n),
    "euler-inverse": lambda y, n: series.series_reciprocal(series.euler_g(n)),
    "log1p": lambda y, n: series.log1p_series(n),
}


def parse_series(spec: str, trunc: int) -> series.PowerSeries:
    """A named series (``exp:1/2``, ``bernoulli-inverse^3``, ...) or a coefficient list.

    Named series take an optional ``:Y`` parameter (default 1) for the
    ``exp``/``exp-minus-one``/``integral`` family and an optional ``^R`` power.
    Coefficient lists give ordinary coefficients ``c_0,c_1,...`` of ``t^k``.
    """
    spec = spec.strip()
    if spec[:1].isdigit() or spec[:1] in "-[":
        body = spec.strip("[]")
        try:
            return series.PowerSeries(parse_rational(c) for c in body.split(","))
        except UmbraError as exc:
            raise _UsageError(f"umbra pairing: bad coefficient list {spec!r}: {exc}") from None
    head, _, power = spec.partition("^")
    name, _, ytext = head.partition(":")
    if name not in _NAMED_SERIES:
        known = ", ".join(sorted(_NAMED_SERIES))
        raise _UsageError(f"umbra pairing: unknown series {name!r} (known: {known})")
    try:
        y = parse_rational(ytext) if ytext else Fraction(1)
        f = _NAMED_SERIES[name](y, trunc)
        if power:
            f = f ** _nonneg(power)
    except (UmbraError, argparse.ArgumentTypeError) as exc:
        raise _UsageError(f"umbra pairing: bad series {spec!r}: {exc}") from None
    return f


def _cmd_pairing(args) -> CommandResult:
    p = _parse_poly(args.expr)
    trunc = max(args.trunc, p.degree if p.coeffs else 0)
    f = parse_series(args.series, trunc)
    value = series.pairing(f, p)
    payload = {"series": args.series, "poly": format_poly(p), "value": fmt_rational(value)}
    return CommandResult(
        OutputDoc(
            args.format,
            payload,
            text=lambda d: d["value"],
            latex=lambda d: f"\\left\\langle f(t) \\,\\middle|\\, {latex_poly(p)} \\right\\rangle = {latex_rational(value)}",
        ),
        EXIT_OK,
    )


def _verify_text(d: dict) -> str:
    lines = [f"{name}: {c['pass']}/{c['total']}" for name, c in d["summary"].items()]
    for e in d["entries"]:
        if e["status"] == "fail":
            lines.append(f"FAIL {e['identity']} {e['params']}: {e['difference']}")
    verdict = "all pass" if d["passed"] else f"{d['failures']} failure(s)"
    lines.append(f"{d['total']} checks, {verdict} (max_n={d['ranges']['max_n']}, max_r={d['ranges']['max_r']}, seed={d['seed']})")
    return "\n".join(lines)


def _verify_latex(d: dict) -> str:
    rows = [f"\\texttt{{{name}}} & {c['pass']} & {c['total']} \\\\" for name, c in d["summary"].items()]
    return "\n".join(["\\begin{tabular}{lrr}", "identity & pass & total \\\\ \\hline", *rows, "\\end{tabular}"])


def _cmd_verify(args) -> CommandResult:
    report = identities.verify_all(args.max_n, args.max_r, seed=args.seed)
    doc = OutputDoc(args.format, report.to_dict(), text=_verify_text, latex=_verify_latex)
    return CommandResult(doc, EXIT_OK if report.passed else EXIT_FAIL)


_COMMANDS = {
    "bernoulli": _cmd_bernoulli,
    "euler": _cmd_euler,
    "numbers": _cmd_numbers,
    "expand": _cmd_expand,
    "pairing": _cmd_pairing,
    "verify": _cmd_verify,
}


def run_command(argv: Sequence[str]) -> CommandResult:
    """Parse ``argv`` and run one subcommand without touching the process streams."""
    parser = build_parser()
    try:
        buf = io.StringIO()
        with redirect_stderr(buf):
            try:
                args = parser.parse_args(list(argv))
            except SystemExit as exc:  # --help
                return CommandResult(None, EXIT_OK if not exc.code else EXIT_USAGE, buf.getvalue())
        if args.command is None:
            raise _UsageError(parser.format_usage() + "umbra: error: a subcommand is required")
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        return CommandResult(None, EXIT_USAGE, str(exc))
    except ParseError as exc:
        return CommandResult(None, EXIT_USAGE, f"umbra: parse error: {exc}")
    except (UmbraError, argparse.ArgumentTypeError) as exc:
        return CommandResult(None, EXIT_USAGE, f"umbra: {exc}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if "-h" in argv or "--help" in argv:
        # let argparse print help to stdout normally
        build_parser().parse_args(list(argv))
    result = run_command(argv)
    if result.doc is not None:
        print(result.doc.render())
    if result.diagnostic:
        print(result.diagnostic.rstrip(), file=sys.stderr)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
