"""Recursive-descent parser and evaluator for field expressions.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | base ('^' exponent)?
    exponent := '-'? INTEGER | '(' expr ')'          # constant
    base     := INTEGER | 't' | 'x' | '(' expr ')' | FUNC '(' expr ')'
    FUNC     := sqrt | std | abs | val | O

``t`` and ``x`` both denote the indeterminate.  ``O(t^n)`` is the zero
series known below ``t^n``, so ``1 + t + O(t^2)`` reads back the printed
form of a truncated series.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .base import OrderedFieldError
from .fields import FieldTag, q_embed, standard_part, valuation
from .ratfunc import RationalFunction
from .rational import Q, rat_sqrt_exact
from .series import DEFAULT_DEPTH, INF, Series

FUNCS = ("sqrt", "std", "abs", "val", "O")
VARS = ("t", "x")


class ParseError(ValueError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class SessionConfig:
    field: FieldTag = FieldTag.LAURENT
    trunc: int = DEFAULT_DEPTH
    format: str = "text"
    scan_bound: int = 10**6

    def __post_init__(self):
        object.__setattr__(self, "field", FieldTag(self.field))
        if self.trunc < 1:
            raise ValueError("trunc must be >= 1")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")


# -- syntax tree ----------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Q

    def __repr__(self):
        return str(self.value)


@dataclass(frozen=True)
class Var:
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Neg:
    operand: object

    def __repr__(self):
        return f"Neg({self.operand!r})"


_OP_NAMES = {"+": "Add", "-": "Sub", "*": "Mul", "/": "Div"}


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object

    def __repr__(self):
        return f"{_OP_NAMES[self.op]}({self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: Q

    def __repr__(self):
        return f"Pow({self.base!r}, {self.exponent})"


@dataclass(frozen=True)
class Call:
    func: str
    arg: object

    def __repr__(self):
        return f"{self.func}({self.arg!r})"


# -- lexer / parser ---------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.end() == pos or m.lastindex is None:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, config: SessionConfig):
        self.tokens = _tokenize(text)
        self.i = 0
        self.config = config

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value or kind == "end":
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self):
        if self.tok[0] == "end":
            raise ParseError("empty expression", self.tok[2])
        node = self.expr()
        if self.tok[0] != "end":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.tok[0] == "op" and self.tok[1] in "+-":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.tok[0] == "op" and self.tok[1] in "*/":
            op = self.take()[1]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.tok[:2] == ("op", "-"):
            self.take()
            return Neg(self.factor())
        base = self.base()
        if self.tok[:2] == ("op", "^"):
            self.take()
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> Q:
        pos = self.tok[2]
        if self.tok[:2] == ("op", "("):
            self.take()
            node = self.expr()
            self.expect(")")
            try:
                value = _constant(node)
            except ValueError as exc:
                raise ParseError(f"exponent must be a rational constant ({exc})", pos) from None
        else:
            sign = 1
            if self.tok[:2] == ("op", "-"):
                self.take()
                sign = -1
            kind, v, p = self.take()
            if kind != "num":
                raise ParseError("expected an integer exponent", p)
            value = Q(sign * int(v))
        if value.denominator != 1 and self.config.field is not FieldTag.LEVI_CIVITA:
            raise ParseError(f"rational exponent {value} needs the lc field", pos)
        return value

    def base(self):
        kind, v, pos = self.take()
        if kind == "num":
            return Num(Q(int(v)))
        if kind == "op" and v == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "name":
            if v in VARS:
                if self.config.field is FieldTag.Q:
                    raise ParseError(f"indeterminate {v!r} is not available in field q", pos)
                return Var(v)
            if v in FUNCS:
                if v == "O" and self.config.field not in (FieldTag.LAURENT, FieldTag.LEVI_CIVITA):
                    raise ParseError("O(...) needs a series field", pos)
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(v, arg)
            raise ParseError(f"unknown name {v!r}", pos)
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def _constant(node) -> Q:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        return -_constant(node.operand)
    if isinstance(node, BinOp):
        a, b = _constant(node.left), _constant(node.right)
        if node.op == "/" and b == 0:
            raise ValueError("division by zero")
        return {"+": a + b, "-": a - b, "*": a * b, "/": a / b if b else 0}[node.op]
    if isinstance(node, Pow):
        base = _constant(node.base)
        if node.exponent.denominator != 1:
            raise ValueError("nested rational power")
        return base ** int(node.exponent)
    raise ValueError("not a constant")


def parse_expression(text: str, config: SessionConfig | None = None):
    return _Parser(text, config or SessionConfig()).parse()


# -- evaluation ---------------------------------------------------------------


def evaluate(node, config: SessionConfig | None = None):
    config = config or SessionConfig()
    field, depth = config.field, config.trunc

    def ev(n):
        if isinstance(n, Num):
            return q_embed(n.value, field)
        if isinstance(n, Var):
            return field.indeterminate()
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, BinOp):
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return a + b
            if n.op == "-":
                return a - b
            if n.op == "*":
                return a * b
            if isinstance(b, Series):
                return a * b.inverse(depth)
            return a / b
        if isinstance(n, Pow):
            return _power(ev(n.base), n.exponent, depth)
        if isinstance(n, Call):
            return _call(n.func, ev(n.arg), field, depth)
        raise TypeError(f"unknown node {n!r}")

    return ev(node)


def _power(x, p: Q, depth: int):
    if isinstance(x, Series):
        if p.denominator != 1:
            return x.rational_power(p, depth)
        n = int(p)
        return (x ** -n).inverse(depth) if n < 0 else x**n
    if isinstance(x, RationalFunction):
        return x ** int(p)
    return x ** int(p)


def _call(func: str, x, field: FieldTag, depth: int):
    if func == "abs":
        return abs(x)
    if func == "std":
        return q_embed(standard_part(x), field)
    if func == "val":
        v = valuation(x)
        if v == INF:
            raise OrderedFieldError("valuation of zero is infinite")
        return q_embed(v, field)
    if func == "sqrt":
        if isinstance(x, Series):
            return x.sqrt(depth)
        if isinstance(x, RationalFunction):
            raise OrderedFieldError("sqrt is not available for rational functions")
        if x < 0:
            raise OrderedFieldError(f"square root of negative rational {x}")
        r = rat_sqrt_exact(x)
        if r is None:
            raise OrderedFieldError(f"{x} is not the square of a rational")
        return r
    if func == "O":
        if not (isinstance(x, Series) and x.is_exact and len(x.terms) == 1 and x.terms[0][1] == 1):
            raise OrderedFieldError("O(...) takes a single monomial t^e")
        return Series.big_o(x.terms[0][0], x.mode)
    raise OrderedFieldError(f"unknown function {func}")


def parse_value(text: str, config: SessionConfig | None = None):
    """Parse and evaluate in one go."""
    config = config or SessionConfig()
    return evaluate(parse_expression(text, config), config)
