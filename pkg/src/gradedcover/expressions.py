"""Expression text frontend.

Grammar (no implicit multiplication):

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := "-" unary | atom ("^" integer)?
    atom  := "(" expr ")" | identifier | integer | "i" | "zeta(" int "," int ")"

Identifiers may carry a weight suffix, canonically ``name@(k1,...,kt)``;
the shorthand ``name@k`` is accepted for rank-one groups.  ``parse_expression``
elaborates against a declared signature into an exact superfunction, and
``format_expression`` renders one back in a canonical, re-parseable form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import SuperMonomial, SuperPolynomial, SuperRational, SuperSignature
from .cyclotomic import Cyclotomic, root_of_unity
from .errors import ExprSyntaxError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:@(?:\(\s*\d+(?:\s*,\s*\d+)*\s*\)|\d+))?)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "ident" | one of "+-*/^(),", or "end"
    text: str
    pos: int  # 1-based offset in the source text


def _lex(text: str) -> list[Token]:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[i]!r}", i + 1)
        if m.lastgroup != "ws":
            kind = m.lastgroup if m.lastgroup != "op" else m.group()
            tokens.append(Token(kind, m.group(), i + 1))
        i = m.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


def normalize_var_name(name: str) -> str:
    """Canonicalize the weight suffix: ``x@1`` becomes ``x@(1)``."""
    if "@" not in name:
        return name
    base, suffix = name.split("@", 1)
    try:
        if suffix.startswith("(") and suffix.endswith(")"):
            ks = [int(p) for p in suffix[1:-1].split(",")]
        else:
            ks = [int(suffix)]
    except ValueError:
        raise ValueError(
            f"malformed weight suffix in {name!r}; expected name@(k1,...,kt)"
        ) from None
    return f"{base}@({','.join(str(k) for k in ks)})"


# -- abstract syntax ------------------------------------------------------


@dataclass(frozen=True)
class Node:
    pass


@dataclass(frozen=True)
class Integer(Node):
    value: int


@dataclass(frozen=True)
class ImaginaryUnit(Node):
    pass


@dataclass(frozen=True)
class Zeta(Node):
    order: int
    power: int


@dataclass(frozen=True)
class Variable(Node):
    name: str
    pos: int


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Div(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.idx = 0

    def peek(self) -> Token:
        return self.tokens[self.idx]

    def advance(self) -> Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            what = tok.text or "end of input"
            raise ExprSyntaxError(f"expected {kind!r}, found {what!r}", tok.pos)
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            node = Add(node, rhs) if op.kind == "+" else Sub(node, rhs)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.unary()
            node = Mul(node, rhs) if op.kind == "*" else Div(node, rhs)
        return node

    def unary(self) -> Node:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.unary())
        node = self.atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("int")
            node = Pow(node, int(tok.text))
        return node

    def atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "int":
            self.advance()
            return Integer(int(tok.text))
        if tok.kind == "ident":
            self.advance()
            if tok.text == "i":
                return ImaginaryUnit()
            if tok.text == "zeta":
                self.expect("(")
                order = int(self.expect("int").text)
                self.expect(",")
                power = int(self.expect("int").text)
                self.expect(")")
                if order < 1:
                    raise ExprSyntaxError("zeta needs a positive order", tok.pos)
                return Zeta(order, power)
            return Variable(tok.text, tok.pos)
        what = tok.text or "end of input"
        raise ExprSyntaxError(f"expected a value, found {what!r}", tok.pos)


def parse_ast(text: str) -> Node:
    return _Parser(_lex(text)).parse()


def elaborate(node: Node, signature: SuperSignature) -> SuperRational:
    """Resolve variables against the signature and build the exact function."""
    if isinstance(node, Integer):
        return SuperRational.constant(signature, node.value)
    if isinstance(node, ImaginaryUnit):
        return SuperRational.constant(signature, root_of_unity(4, 1))
    if isinstance(node, Zeta):
        return SuperRational.constant(signature, root_of_unity(node.order, node.power))
    if isinstance(node, Variable):
        name = normalize_var_name(node.name)
        if name not in signature.even and name not in signature.odd:
            raise ExprSyntaxError(f"unknown identifier {node.name!r}", node.pos)
        return SuperRational.variable(signature, name)
    if isinstance(node, Neg):
        return -elaborate(node.operand, signature)
    if isinstance(node, Pow):
        return elaborate(node.base, signature) ** node.exponent
    if isinstance(node, Mul):
        return elaborate(node.left, signature) * elaborate(node.right, signature)
    if isinstance(node, Div):
        return elaborate(node.left, signature) / elaborate(node.right, signature)
    if isinstance(node, Add):
        return elaborate(node.left, signature) + elaborate(node.right, signature)
    if isinstance(node, Sub):
        return elaborate(node.left, signature) - elaborate(node.right, signature)
    raise TypeError(f"unknown node {node!r}")


def parse_expression(text: str, signature: SuperSignature) -> SuperRational:
    return elaborate(parse_ast(text), signature)


# -- formatting ------------------------------------------------------------


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coeff_pieces(c: Cyclotomic) -> list[str]:
    """Render a coefficient as signed product strings, one per basis term."""
    if c.is_rational():
        return [_format_fraction(c.rational_value())]
    pieces = []
    for k, q in enumerate(c.coeffs):
        if not q:
            continue
        if k == 0:
            pieces.append(_format_fraction(q))
            continue
        root = "i" if c.conductor == 4 else f"zeta({c.conductor},{k})"
        if q == 1:
            pieces.append(root)
        elif q == -1:
            pieces.append(f"-{root}")
        else:
            pieces.append(f"{_format_fraction(q)}*{root}")
    return pieces


def _join_signed(pieces: list[str]) -> str:
    text = pieces[0]
    for p in pieces[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text


def _format_term(signature: SuperSignature, mono: SuperMonomial, c: Cyclotomic) -> str:
    vars_parts = []
    for i, e in enumerate(mono.even):
        if e == 1:
            vars_parts.append(signature.even[i])
        elif e > 1:
            vars_parts.append(f"{signature.even[i]}^{e}")
    vars_parts.extend(signature.odd[j] for j in mono.odd)

    pieces = _coeff_pieces(c)
    if len(pieces) > 1:
        coeff_txt = f"({_join_signed(pieces)})"
    else:
        coeff_txt = pieces[0]
        if vars_parts and coeff_txt == "1":
            coeff_txt = ""
        elif vars_parts and coeff_txt == "-1":
            coeff_txt = "-"

    body = "*".join(vars_parts)
    if coeff_txt in ("", "-"):
        return coeff_txt + body
    return coeff_txt + ("*" + body if body else "")


def _format_poly(poly: SuperPolynomial) -> str:
    if poly.is_zero():
        return "0"
    parts = [
        _format_term(poly.signature, mono, c) for mono, c in poly.sorted_terms()
    ]
    return _join_signed(parts)


def format_expression(f: SuperRational | SuperPolynomial) -> str:
    """Canonical text form; ``parse_expression`` reads it back exactly."""
    if isinstance(f, SuperPolynomial):
        return _format_poly(f)
    num = _format_poly(f.numerator)
    if f.denominator == SuperPolynomial.one(f.signature):
        return num
    return f"({num})/({_format_poly(f.denominator)})"
