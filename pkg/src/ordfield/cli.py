"""Command-line front end.

Exit codes: 0 success, 1 domain error (the mathematics refused), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import math
import sys
from typing import NamedTuple

from .archimedean import bisect_ivt, bw_select, dyadic_sup_report, sqrt_sup_iterate
from .base import OrderedFieldError
from .completeness import (
    ClosedInterval,
    OpenInterval,
    archimedean_probe,
    bounded_naturals_probe,
    cantor_point_finite,
    cauchy_probe,
    fip_check,
    gen_unbounded_increasing,
    open_fip_point,
)
from .fields import FieldTag, classify, field_of, standard_part, valuation
from .metric import metric_distance
from .parser import ParseError, SessionConfig, parse_value
from .ratfunc import RationalFunction
from .rational import Q
from .report import ProbeReport, Verdict, format_report
from .series import INF, Series, format_exponent

PROBES = (
    "cantor",
    "open-fip",
    "cauchy",
    "archimedean",
    "dyadic-sup",
    "sqrt-iter",
    "ivt",
    "bw",
    "naturals-bounded",
    "unbounded-seq",
)


class UsageError(Exception):
    pass


class CommandResult(NamedTuple):
    code: int
    output: str
    error: str = ""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _rational_arg(text: str) -> Q:
    try:
        return Q(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=[f.value for f in FieldTag], default=argparse.SUPPRESS)
    common.add_argument("--trunc", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--scan-bound", type=int, default=argparse.SUPPRESS)

    parser = _ArgumentParser(prog="ordfield", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser, required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    add("eval", "print the canonical form").add_argument("expr")
    add("classify", "infinitesimal / finite / infinite").add_argument("expr")
    p = add("compare", "Less / Equal / Greater")
    p.add_argument("left")
    p.add_argument("right")
    add("val", "valuation").add_argument("expr")
    p = add("dist", "valuation-metric distance")
    p.add_argument("left")
    p.add_argument("right")
    add("sqrt", "square root").add_argument("expr")

    p = add("probe", "run a completeness probe or constructive algorithm")
    p.add_argument("name", choices=PROBES)
    p.add_argument("args", nargs="*")
    p.add_argument("--rho")
    p.add_argument("--eps", action="append")
    p.add_argument("--tol", type=_rational_arg, default=Q(1, 1000))
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--levels", type=int, default=20)
    p.add_argument("--iters", type=int, default=30)
    p.add_argument("--lo", type=_rational_arg, default=None)
    p.add_argument("--hi", type=_rational_arg, default=None)
    p.add_argument("--k", type=int, default=5)
    return parser


def _config(ns) -> SessionConfig:
    return SessionConfig(
        field=FieldTag(getattr(ns, "field", "laurent")),
        trunc=getattr(ns, "trunc", 16),
        format=getattr(ns, "format", "text"),
        scan_bound=getattr(ns, "scan_bound", 10**6),
    )


def _level_text(v) -> str:
    return "inf" if v == INF else str(Q(v))


def _value_json(x) -> dict:
    out = {"value": str(x)}
    if isinstance(x, Series):
        out["terms"] = [[format_exponent(e).strip("()"), str(c)] for e, c in x.terms]
        out["order"] = None if x.is_exact else str(Q(x.order))
    elif isinstance(x, RationalFunction):
        out["num"] = [str(c) for c in x.num.coeffs]
        out["den"] = [str(c) for c in x.den.coeffs]
    return out


def _emit(cfg: SessionConfig, command: str, text: str, data: dict) -> str:
    if cfg.format == "json":
        return json.dumps({"command": command, "field": cfg.field.value, **data}, indent=2) + "\n"
    return text


def _interval(text: str, cfg: SessionConfig, cls):
    body = text.strip()
    if body[:1] in "[(" and body[-1:] in "])":
        body = body[1:-1]
    parts = body.split(",")
    if len(parts) != 2:
        raise UsageError(f"interval must be written LO,HI: {text!r}")
    return cls(parse_value(parts[0], cfg), parse_value(parts[1], cfg))


def _run_probe(ns, cfg: SessionConfig) -> ProbeReport:
    name, args = ns.name, ns.args

    def need(n):
        if len(args) != n:
            raise UsageError(f"probe {name} takes {n} positional argument(s), got {len(args)}")

    if name == "cantor":
        if not args:
            raise UsageError("probe cantor needs at least one interval LO,HI")
        family = [_interval(a, cfg, ClosedInterval) for a in args]
        if not fip_check(family):
            return ProbeReport(name, Verdict.COUNTEREXAMPLE, [], ["max lo > min hi: intersection is empty"])
        point = cantor_point_finite(family)
        return ProbeReport(name, Verdict.WITNESS, [point], [f"member of all {len(family)} intervals"])
    if name == "open-fip":
        if not args or ns.rho is None:
            raise UsageError("probe open-fip needs intervals LO,HI and --rho")
        family = [_interval(a, cfg, OpenInterval) for a in args]
        rho = parse_value(ns.rho, cfg)
        zeta = open_fip_point(family, rho)
        return ProbeReport(
            name, Verdict.WITNESS, [zeta], [f"rho = {rho}", f"strictly inside all {len(family)} intervals"]
        )
    if name == "cauchy":
        if not args or not ns.eps:
            raise UsageError("probe cauchy needs terms and at least one --eps")
        prefix = [parse_value(a, cfg) for a in args]
        return cauchy_probe(prefix, [parse_value(e, cfg) for e in ns.eps])
    if name == "archimedean":
        need(1)
        return archimedean_probe(parse_value(args[0], cfg), cfg.scan_bound)
    if name == "dyadic-sup":
        need(1)
        a = _rational_arg(args[0])
        if a <= 0:
            raise OrderedFieldError(f"a = {a} must be positive")
        m = 0 if ns.m is None else ns.m
        M = max(1, math.ceil(a)) if ns.M is None else ns.M
        report = dyadic_sup_report(lambda q: q > 0 and q * q >= a, m, M, ns.levels)
        report.trace.insert(0, f"S = {{q : q^2 < {a}}}, m = {m}, M = {M}")
        return report
    if name == "sqrt-iter":
        need(1)
        return sqrt_sup_iterate(_rational_arg(args[0]), ns.tol, ns.max_iter).to_report()
    if name == "ivt":
        need(3)
        pcfg = SessionConfig(FieldTag.RATFUNC_INF, cfg.trunc, cfg.format, cfg.scan_bound)
        poly = parse_value(args[0], pcfg)
        if not isinstance(poly, RationalFunction) or poly.den.degree != 0:
            raise OrderedFieldError(f"{args[0]!r} is not a polynomial")
        iv = bisect_ivt(poly.num, _rational_arg(args[1]), _rational_arg(args[2]), ns.iters)
        return ProbeReport(
            name,
            Verdict.WITNESS,
            [iv],
            [f"width = {iv.width}", f"p(lo) = {poly.num(iv.lo)}", f"p(hi) = {poly.num(iv.hi)}"],
        )
    if name == "bw":
        if not args or ns.lo is None or ns.hi is None:
            raise UsageError("probe bw needs terms, --lo and --hi")
        prefix = [_rational_arg(a) for a in args]
        sel = bw_select(prefix, ns.lo, ns.hi, ns.k)
        trace = [f"k={k + 1}: n={n}, x={prefix[n]}, interval={iv}" for k, (n, iv) in enumerate(zip(sel.indices, sel.intervals))]
        if sel.exhausted:
            trace.append("prefix exhausted before all levels were chosen")
        verdict = Verdict.INCONCLUSIVE if sel.exhausted else Verdict.WITNESS
        return ProbeReport(name, verdict, sel.indices, trace)
    if name == "naturals-bounded":
        need(1)
        return bounded_naturals_probe(int(args[0]), cfg.field)
    if name == "unbounded-seq":
        need(1)
        seq = gen_unbounded_increasing(int(args[0]), cfg.field)
        for i in range(len(seq) - 1):
            if not seq[i] < seq[i + 1]:
                raise AssertionError("sequence is not increasing")
        for x in seq:
            if not x > cfg.scan_bound:
                raise AssertionError(f"{x} does not exceed {cfg.scan_bound}")
        return ProbeReport(
            name,
            Verdict.WITNESS,
            seq,
            ["strictly increasing", f"every term exceeds {cfg.scan_bound}", "every term is infinitely large"],
        )
    raise UsageError(f"unknown probe {name}")


def _dispatch(ns) -> str:
    cfg = _config(ns)
    cmd = ns.command
    if cmd == "eval":
        x = parse_value(ns.expr, cfg)
        return _emit(cfg, cmd, f"{x}\n", {"result": _value_json(x)})
    if cmd == "sqrt":
        x = parse_value(f"sqrt({ns.expr})", cfg)
        return _emit(cfg, cmd, f"{x}\n", {"result": _value_json(x)})
    if cmd == "classify":
        x = parse_value(ns.expr, cfg)
        c = classify(x)
        yn = lambda b: "true" if b else "false"  # noqa: E731
        text = f"infinitesimal: {yn(c.infinitesimal)}, finite: {yn(c.finite)}, infinite: {yn(c.infinite)}\n"
        text += f"zero: {yn(c.is_zero)}\n"
        data = {
            "is_zero": c.is_zero,
            "infinitesimal": c.infinitesimal,
            "finite": c.finite,
            "infinite": c.infinite,
        }
        if c.finite:
            st = standard_part(x)
            text += f"standard part: {st}\n"
            data["standard_part"] = str(st)
        return _emit(cfg, cmd, text, data)
    if cmd == "compare":
        a, b = parse_value(ns.left, cfg), parse_value(ns.right, cfg)
        if isinstance(a, (Series, RationalFunction)):
            result = a.compare(b)
        else:
            result = "Less" if a < b else "Greater" if a > b else "Equal"
        return _emit(cfg, cmd, f"{result}\n", {"result": str(result)})
    if cmd == "val":
        x = parse_value(ns.expr, cfg)
        v = _level_text(valuation(x))
        return _emit(cfg, cmd, f"{v}\n", {"result": v})
    if cmd == "dist":
        a, b = parse_value(ns.left, cfg), parse_value(ns.right, cfg)
        if field_of(a).archimedean:
            raise OrderedFieldError("the valuation metric on Q is trivial; use a series or rational-function field")
        d = metric_distance(a, b)
        level = _level_text(d.level)
        return _emit(
            cfg,
            cmd,
            f"level: {level}\ndisplay: {d.display_text()}\n",
            {"level": level, "display": d.display_text()},
        )
    if cmd == "probe":
        report = _run_probe(ns, cfg)
        return format_report(report, cfg.format)
    raise UsageError(f"unknown command {cmd}")


def run_command(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(io.StringIO()) as buf:
            try:
                ns = parser.parse_args(argv)
            except SystemExit as exc:  # --help
                return CommandResult(int(exc.code or 0), buf.getvalue())
        return CommandResult(0, _dispatch(ns))
    except (UsageError, argparse.ArgumentTypeError) as exc:
        return CommandResult(2, "", f"{exc}\n")
    except ParseError as exc:
        return CommandResult(2, "", f"parse error: {exc}\n")
    except (OrderedFieldError, ZeroDivisionError, ValueError, OverflowError) as exc:
        return CommandResult(1, "", f"error: {exc}\n")


def main(argv: list[str] | None = None) -> int:
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.output)
    sys.stderr.write(result.error)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
