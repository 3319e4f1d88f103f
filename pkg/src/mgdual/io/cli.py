"""Command-line entry point: ``mgdual <command> <problem file> ...``."""

from __future__ import annotations

import argparse
import itertools
import sys
from dataclasses import dataclass, field
from pathlib import Path

from ..dual import GradedIdeal
from ..errors import MgDualError
from ..grading import monomials_of_degree
from ..idealops import as_presentation, multiplicity, quotient, saturate, witness
from ..oracle import oracle_hilbert, oracle_membership, oracle_quotient_hilbert
from ..polynomial import Polynomial
from . import report
from .parser import parse_degree, parse_polynomial, parse_problem


@dataclass
class Outcome:
    command: str
    values: dict
    text: str
    meta: dict = field(default_factory=dict)
    verified: bool | None = None
    plot: object = None  # callable(path) rendering a figure


class Context:
    def __init__(self, path):
        self.path = Path(path)
        self.problem = parse_problem(self.path.read_text(encoding="utf-8"))
        self.grading = self.problem.grading
        self._presentations = {}

    def ideal(self, name) -> GradedIdeal:
        if name not in self.problem.ideals:
            known = ", ".join(self.problem.ideals) or "none"
            raise MgDualError(f"no ideal named {name!r} in {self.path} (defined: {known})")
        return GradedIdeal(self.grading, self.problem.ideals[name], name=name)

    def presentation(self, name):
        if name not in self._presentations:
            self._presentations[name] = as_presentation(self.ideal(name))
        return self._presentations[name]

    def degree(self, text):
        return parse_degree(text, self.grading.rank)

    def divisor(self, text):
        """An ideal name from the file or a polynomial expression."""
        if text in self.problem.ideals:
            return self.ideal(text)
        return parse_polynomial(text, self.grading)


def _label(by):
    return by.name if isinstance(by, GradedIdeal) else f"<{by}>"


def _divisor_gens(by):
    return list(by.generators) if isinstance(by, GradedIdeal) else [by]


def _power_gens(gens, p):
    out = []
    for combo in itertools.combinations_with_replacement(gens, p):
        prod = combo[0]
        for f in combo[1:]:
            prod = prod * f
        out.append(prod)
    return out


def cmd_validate(ctx, args):
    g = ctx.grading
    lines = [str(g), "cone rows (B): " + "; ".join(" ".join(str(x) for x in r) for r in g.B)]
    for name in ctx.problem.ideals:
        ideal = ctx.ideal(name)
        lines.append(f"ideal {name}: {len(ideal.generators)} homogeneous generator(s)")
        for f, d in zip(ideal.generators, ideal.degrees):
            lines.append(f"  deg {report.fmt_degree(d)}: {f}")
    return Outcome("validate", {}, "\n".join(lines) + "\n")


def cmd_hilbert(ctx, args, name=None, top=None):
    name = name or args.ideal
    top = top or ctx.degree(args.max_degree)
    pres = ctx.presentation(name)
    values = pres.hilbert_table(top)
    out = Outcome("hilbert", values, report.hilbert_text(values, ctx.grading.rank), {"ideal": name})
    if args.verify:
        ideal = ctx.ideal(name)
        out.verified = all(oracle_hilbert(ideal, m) == d for m, d in values.items())
    out.plot = lambda path: _plot_values(values, path, f"Hilbert function of {name}")
    return out


def _plot_values(values, path, title):
    from ..plotting import plot_hilbert

    return plot_hilbert(values, path, title=title)


def cmd_dual_basis(ctx, args, name=None, m=None):
    name = name or args.ideal
    m = m or ctx.degree(args.degree)
    pres = ctx.presentation(name)
    funcs = pres.functionals(m)
    text = f"degree {report.fmt_degree(m)}: dimension {len(funcs)}\n" + "".join(f"  {f}\n" for f in funcs)
    out = Outcome("dual-basis", {m: len(funcs)}, text, {"ideal": name, "basis": [str(f) for f in funcs]})
    if args.verify:
        ideal = ctx.ideal(name)
        ok = oracle_hilbert(ideal, m) == len(funcs)
        for f, d in zip(ideal.generators, ideal.degrees):
            rest = tuple(a - b for a, b in zip(m, d))
            for beta in monomials_of_degree(ctx.grading, rest):
                prod = f * Polynomial.monomial(ctx.grading, beta)
                ok = ok and all(phi(prod) == 0 for phi in funcs)
        out.verified = ok
    return out


def cmd_member(ctx, args, name=None, expr=None):
    name = name or args.ideal
    expr = expr or args.poly
    poly = parse_polynomial(expr, ctx.grading)
    pres = ctx.presentation(name)
    w = witness(poly, pres)
    is_member = w is None
    if is_member:
        text = f"{expr} is a member of {name}\n"
    else:
        text = f"{expr} is not a member of {name}\nwitness: {w}  (value {w(poly)})\n"
    values = {poly.degree: pres.hilbert(poly.degree)} if poly.terms else {}
    out = Outcome("member", values, text, {"ideal": name, "member": is_member, "witness": None if w is None else str(w)})
    if args.verify:
        out.verified = oracle_membership(poly, ctx.ideal(name)) == is_member
    return out


def cmd_quotient(ctx, args, name=None, by_text=None, top=None):
    name = name or args.ideal
    by_text = by_text or args.by
    top = top or ctx.degree(args.max_degree)
    by = ctx.divisor(by_text)
    pres = quotient(ctx.presentation(name), by)
    values = pres.hilbert_table(top)
    label = f"{name}:{_label(by)}"
    out = Outcome("quotient", values, report.hilbert_text(values, ctx.grading.rank, label="H"), {"ideal": label})
    if args.verify:
        ideal = ctx.ideal(name)
        gens = _divisor_gens(by)
        out.verified = all(oracle_quotient_hilbert(ideal, gens, m) == d for m, d in values.items())
    out.plot = lambda path: _plot_values(values, path, f"Hilbert function of {label}")
    return out


def cmd_saturate(ctx, args, name=None, by_text=None, window=None):
    name = name or args.ideal
    by_text = by_text or args.by
    window = window or ctx.degree(args.window)
    by = ctx.divisor(by_text)
    result = saturate(ctx.presentation(name), by, window)
    p = result.stabilized_at
    final = result.chain[p]
    lab = _label(by)
    labels = [f"H_{name}"] + [f"H_{name}:{lab}" + (f"^{q}" if q > 1 else "") for q in range(1, len(result.chain))]
    if ctx.grading.rank == 1:
        text = report.rows_1d(list(zip(labels, result.chain)), result.window)
    else:
        text = report.hilbert_text(final, ctx.grading.rank)
    text += f"stabilized at p = {p}: {labels[p]} = {labels[p + 1]} on the window (not a global certificate)\n"
    chain_json = [[{"degree": list(m), "dim": d} for m, d in t.items()] for t in result.chain]
    meta = {"ideal": f"{name}:{lab}^inf", "stabilized_at": p, "window_stabilized": True, "chain": chain_json}
    out = Outcome("saturate", final, text, meta)
    if args.verify:
        ideal = ctx.ideal(name)
        gens = _divisor_gens(by)
        ok = True
        for q in (p, p + 1):
            pg = _power_gens(gens, q)
            ok = ok and all(oracle_quotient_hilbert(ideal, pg, m) == result.chain[q][m] for m in result.window)
        out.verified = ok
    if ctx.grading.rank == 1:
        out.plot = lambda path: _plot_chain(result.chain, path, labels)
    else:
        out.plot = lambda path: _plot_values(final, path, f"Hilbert function of {name}:{lab}^{p}")
    return out


def _plot_chain(chain, path, labels):
    from ..plotting import plot_chain

    return plot_chain(chain, path, labels=labels, title="iterated quotients")


def cmd_multiplicity(ctx, args, name=None, bound=None):
    name = name or args.ideal
    bound = bound or ctx.degree(args.bound)
    pres = ctx.presentation(name)
    total, complete = multiplicity(pres, bound)
    values = pres.hilbert_table(bound)
    status = "complete" if complete else "incomplete: a lower bound only, dual space continues past the bound"
    text = f"multiplicity of the origin for {name}: {total} ({status})\n"
    out = Outcome("multiplicity", values, text, {"ideal": name, "multiplicity": total, "complete": complete})
    if args.verify:
        ideal = ctx.ideal(name)
        out.verified = all(oracle_hilbert(ideal, m) == d for m, d in values.items())
    return out


def cmd_run(ctx, args):
    outcomes = []
    for q in ctx.problem.queries:
        if q.kind == "hilbert":
            o = cmd_hilbert(ctx, args, q.ideal, ctx.degree(q.args[0]))
        elif q.kind == "dual-basis":
            o = cmd_dual_basis(ctx, args, q.ideal, ctx.degree(q.args[0]))
        elif q.kind == "member":
            o = cmd_member(ctx, args, q.ideal, q.args[0])
        elif q.kind == "quotient":
            o = cmd_quotient(ctx, args, q.ideal, q.args[1], ctx.degree(q.args[0]))
        elif q.kind == "saturate":
            o = cmd_saturate(ctx, args, q.ideal, q.args[1], ctx.degree(q.args[0]))
        else:
            o = cmd_multiplicity(ctx, args, q.ideal, ctx.degree(q.args[0]))
        o.text = f"== {q.kind} {q.ideal} {' '.join(q.args)}\n" + o.text
        outcomes.append(o)
    return outcomes


COMMANDS = {
    "validate": cmd_validate,
    "hilbert": cmd_hilbert,
    "dual-basis": cmd_dual_basis,
    "member": cmd_member,
    "quotient": cmd_quotient,
    "saturate": cmd_saturate,
    "multiplicity": cmd_multiplicity,
    "run": cmd_run,
}


def _add_common(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("table", "json", "csv"), default=d("table"))
    p.add_argument("--verify", action="store_true", default=d(False), help="cross-check against the brute-force oracle")
    p.add_argument("--quiet", action="store_true", default=d(False), help="suppress diagnostics on stderr")
    p.add_argument("--plot", metavar="PATH", default=d(None), help="also render a figure to PATH")


def build_parser():
    parser = argparse.ArgumentParser(prog="mgdual", description="Multi-graded Macaulay dual spaces of polynomial ideals.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        _add_common(p, suppress=True)
        return p

    add("validate", "check the grading and the homogeneity of every generator")
    p = add("hilbert", "Hilbert function below a degree")
    p.add_argument("--ideal", required=True)
    p.add_argument("--max-degree", required=True)
    p = add("dual-basis", "basis of the dual space at one degree")
    p.add_argument("--ideal", required=True)
    p.add_argument("--degree", required=True)
    p = add("member", "ideal membership of a homogeneous polynomial")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p = add("quotient", "Hilbert function of an ideal quotient")
    p.add_argument("--ideal", required=True)
    p.add_argument("--by", required=True, help="ideal name or polynomial")
    p.add_argument("--max-degree", required=True)
    p = add("saturate", "iterate quotients until the Hilbert function stabilizes on a window")
    p.add_argument("--ideal", required=True)
    p.add_argument("--by", required=True, help="ideal name or polynomial")
    p.add_argument("--window", required=True)
    p = add("multiplicity", "multiplicity of the origin, summed below a bound")
    p.add_argument("--ideal", required=True)
    p.add_argument("--bound", required=True)
    add("run", "execute the query section of the problem file")
    return parser


def _render(outcome, ctx, fmt):
    if fmt == "table":
        return outcome.text
    if fmt == "csv":
        return report.to_csv(outcome.values, ctx.grading.rank)
    return report.document(ctx.grading, outcome.values, command=outcome.command, verified=outcome.verified, **outcome.meta)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = Context(args.file)
        result = COMMANDS[args.command](ctx, args)
    except (MgDualError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    outcomes = result if isinstance(result, list) else [result]

    if args.format == "json":
        docs = [_render(o, ctx, "json") for o in outcomes]
        print(report.to_json(docs if isinstance(result, list) else docs[0]))
    else:
        for o in outcomes:
            sys.stdout.write(_render(o, ctx, args.format))

    if args.plot:
        plotted = [o for o in outcomes if o.plot is not None]
        for n, o in enumerate(plotted):
            path = Path(args.plot)
            if len(plotted) > 1:
                path = path.with_name(f"{path.stem}-{n + 1}{path.suffix}")
            o.plot(path)
            if not args.quiet:
                print(f"figure written to {path}", file=sys.stderr)

    failed = [o for o in outcomes if o.verified is False]
    if args.verify and not args.quiet:
        for o in outcomes:
            state = "ok" if o.verified else ("MISMATCH" if o.verified is False else "n/a")
            print(f"verify {o.command}: {state}", file=sys.stderr)
    return 2 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
