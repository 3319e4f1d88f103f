"""Polynomial expressions and the problem-file format.

Expressions use ``+ - * ^``, parentheses, integer or ``a/b`` literals and the
declared variable names.  Multiplication must be written out.  Binding, from
tightest: ``^`` (right associative, nonnegative integer exponents), unary
``-``, ``*``, binary ``+``/``-``.

A problem file is split into sections::

    # comment
    vars: x1 x2
    grading:
    1 2
    cone:            (optional)
    1
    ideal I:
    29/16*x1^3 - 2*x1*x2
    x2 - x1^2
    query:           (optional)
    hilbert I 4
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import NonHomogeneousGenerator, ParseError, UnknownVariable
from ..grading import validate_grading
from ..polynomial import Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))")

QUERY_KINDS = ("hilbert", "dual-basis", "member", "quotient", "saturate", "multiplicity")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    col: int


def tokenize(text: str, line=None):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), start + 1))
        pos = m.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _ExprParser:
    def __init__(self, text, grading, line=None):
        self.grading = grading
        self.line = line
        self.tokens = tokenize(text, line)
        self.i = 0
        self.names = {n: k for k, n in enumerate(grading.var_names)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok.col)

    def parse(self):
        if self.peek().kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            if tok.kind in ("num", "name") or tok.text == "(":
                raise self.error("implicit multiplication is not allowed; write '*'")
            raise self.error(f"unexpected {tok.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek().text == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek().text == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().text == "^":
            self.take()
            return base ** self.exponent()
        return base

    def exponent(self):
        tok = self.peek()
        if tok.text == "(":
            self.take()
            value = self.exponent()
            if self.take().text != ")":
                raise self.error("expected ')' after exponent")
        elif tok.kind == "num" and "/" not in tok.text:
            self.take()
            value = int(tok.text)
        else:
            raise self.error("exponents must be nonnegative integers")
        if self.peek().text == "^":
            self.take()
            value = value ** self.exponent()
        return value

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise self.error("zero denominator", tok)
            return Polynomial.constant(self.grading, Fraction(int(num), int(den or 1)))
        if tok.kind == "name":
            k = self.names.get(tok.text)
            if k is None:
                raise UnknownVariable(f"unknown variable {tok.text!r}", self.line, tok.col)
            return Polynomial.variable(self.grading, k)
        if tok.text == "(":
            value = self.expr()
            close = self.take()
            if close.text != ")":
                raise self.error("expected ')'", close)
            return value
        if tok.kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_polynomial(text: str, grading, line=None) -> Polynomial:
    return _ExprParser(text, grading, line).parse()


_DEGREE = re.compile(r"^\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)?$")


def parse_degree(text: str, k=None) -> tuple:
    """``"(4,4)"`` -> ``(4, 4)``; a bare integer is accepted for rank one."""
    m = _DEGREE.match(text.strip())
    if not m or (text.strip().startswith("(") != text.strip().endswith(")")):
        raise ParseError(f"bad degree {text!r}; expected e.g. '(1,2)' or '3'")
    deg = tuple(int(x) for x in m.group(1).split(","))
    if k is not None and len(deg) != k:
        raise ParseError(f"degree {text!r} has {len(deg)} entries, the grading has rank {k}")
    return deg


@dataclass(frozen=True)
class Query:
    kind: str
    ideal: str
    args: tuple = ()


@dataclass
class ProblemFile:
    vars: tuple
    grading_rows: tuple
    cone_rows: tuple | None
    ideals: dict  # name -> tuple of Polynomial
    queries: list = field(default_factory=list)

    @property
    def grading(self):
        return validate_grading(self.grading_rows, self.cone_rows, self.vars)

    def __eq__(self, other):
        if not isinstance(other, ProblemFile):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.grading_rows == other.grading_rows
            and self.cone_rows == other.cone_rows
            and list(self.ideals) == list(other.ideals)
            and all(self.ideals[n] == other.ideals[n] for n in self.ideals)
            and self.queries == other.queries
        )


_HEADER = re.compile(r"^(vars|grading|cone|query|ideal\s+([A-Za-z_][A-Za-z0-9_]*))\s*:(.*)$")


def _int_row(text, line):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"expected integers, got {text.strip()!r}", line, 1) from None


def parse_problem(text: str) -> ProblemFile:
    sections = []  # (kind, name, [(lineno, content)])
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        m = _HEADER.match(body.strip())
        if m:
            kind = m.group(1).split()[0]
            name = m.group(2)
            sections.append((kind, name, lineno, []))
            rest = m.group(3).strip()
            if rest:
                sections[-1][3].append((lineno, rest))
            continue
        if not sections:
            raise ParseError("content before the first section header", lineno, 1)
        sections[-1][3].append((lineno, body.strip()))

    found = {}
    ideal_sections = []
    for kind, name, lineno, lines in sections:
        if kind == "ideal":
            if any(n == name for n, _, _ in ideal_sections):
                raise ParseError(f"ideal {name!r} defined twice", lineno, 1)
            ideal_sections.append((name, lineno, lines))
            continue
        if kind in found:
            raise ParseError(f"duplicate section {kind!r}", lineno, 1)
        found[kind] = (lineno, lines)

    if "vars" not in found:
        raise ParseError("missing 'vars:' section")
    if "grading" not in found:
        raise ParseError("missing 'grading:' section")
    var_line, var_lines = found["vars"]
    names = tuple(tok for _, content in var_lines for tok in content.replace(",", " ").split())
    for n in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
            raise ParseError(f"bad variable name {n!r}", var_line, 1)
    if len(set(names)) != len(names):
        raise ParseError("variable names must be unique", var_line, 1)
    if not names:
        raise ParseError("no variables declared", var_line, 1)

    grading_rows = tuple(_int_row(c, ln) for ln, c in found["grading"][1])
    for ln, row in zip((ln for ln, _ in found["grading"][1]), grading_rows):
        if len(row) != len(names):
            raise ParseError(f"grading row has {len(row)} entries for {len(names)} variables", ln, 1)
    if not grading_rows:
        raise ParseError("empty grading section", found["grading"][0], 1)
    cone_rows = None
    if "cone" in found:
        cone_rows = tuple(_int_row(c, ln) for ln, c in found["cone"][1])
    grading = validate_grading(grading_rows, cone_rows, names)

    ideals = {}
    for name, _, lines in ideal_sections:
        gens = []
        for ln, content in lines:
            content = content.rstrip(",").strip()
            poly = parse_polynomial(content, grading, ln)
            if poly.terms and not poly.is_homogeneous():
                raise NonHomogeneousGenerator(name, len(gens), content, poly.term_degrees())
            gens.append(poly)
        ideals[name] = tuple(gens)

    queries = []
    if "query" in found:
        for ln, content in found["query"][1]:
            queries.append(_parse_query(content, ln, ideals, grading.rank))
    return ProblemFile(names, grading_rows, cone_rows, ideals, queries)


def _parse_query(content, ln, ideals, k):
    parts = content.split(None, 2)
    if len(parts) < 2 or parts[0] not in QUERY_KINDS:
        raise ParseError(f"bad query {content!r}; expected '<kind> <ideal> ...' with kind in {QUERY_KINDS}", ln, 1)
    kind, ideal = parts[0], parts[1]
    if ideal not in ideals:
        raise ParseError(f"query refers to unknown ideal {ideal!r}", ln, 1)
    rest = parts[2].strip() if len(parts) > 2 else ""
    if kind in ("hilbert", "dual-basis", "multiplicity"):
        parse_degree(rest, k)
        args = (rest.replace(" ", ""),)
    elif kind == "member":
        if not rest:
            raise ParseError("member query needs a polynomial", ln, 1)
        args = (rest,)
    else:
        deg, _, by = rest.partition(" ")
        parse_degree(deg, k)
        if not by.strip():
            raise ParseError(f"{kind} query needs '<degree> <ideal name or polynomial>'", ln, 1)
        args = (deg, by.strip())
    return Query(kind, ideal, args)


def _fmt_row(row):
    return " ".join(str(x) for x in row)


def emit_problem(problem: ProblemFile) -> str:
    """Render a problem in canonical form; parsing the result gives back an equal problem."""
    lines = ["vars: " + " ".join(problem.vars), "grading:"]
    lines += [_fmt_row(r) for r in problem.grading_rows]
    if problem.cone_rows is not None:
        lines.append("cone:")
        lines += [_fmt_row(r) for r in problem.cone_rows]
    for name, gens in problem.ideals.items():
        lines.append(f"ideal {name}:")
        lines += [str(g) for g in gens]
    if problem.queries:
        lines.append("query:")
        for q in problem.queries:
            lines.append(" ".join([q.kind, q.ideal, *q.args]))
    return "\n".join(lines) + "\n"
