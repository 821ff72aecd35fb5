"""Propositional formulas: AST, text grammar, and evaluation.

Grammar tokens: `/\\` (and), `\\/` (or), `->` (imp), `=>` (imp_pi),
`~` (neg), `&` (strong conjunction), `+` (oplus), `-` (ominus, binary only),
`*` (odot), `D` (delta, prefix), `c(m/n)` rational constants with `0` and `1`
as aliases for the lattice bounds.  Precedence, loosest to tightest:
`->`,`=>` (right-associative) < `\\/`,`+`,`-` (left) < `/\\`,`&`,`*` (left)
< `~`,`D` (prefix).  The printer emits a fully parenthesized canonical form;
printing then parsing is the identity.

Formulas are immutable and may share subterms; evaluation and substitution
memoize on node identity so DAG-shaped formulas cost their node count, not
their tree size.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .algebra import ARITY, ONE, ZERO, Algebra, as_truth_value
from .errors import InputError, SemanticError


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class App:
    op: str
    args: tuple["Formula", ...]


Formula = Union[Var, Const, App]


def var(name: str) -> Var:
    return Var(name)


def const(value) -> Const:
    return Const(as_truth_value(Fraction(value)))


def app(op: str, *args: Formula) -> App:
    if op not in ARITY:
        raise SemanticError(f"unknown connective {op!r}")
    if len(args) != ARITY[op]:
        raise SemanticError(f"{op} expects {ARITY[op]} arguments, got {len(args)}")
    return App(op, tuple(args))


def conj_all(parts: Iterable[Formula]) -> Formula:
    """Left fold of /\\; the empty conjunction is the constant 1."""
    return _fold("and", parts, Const(ONE))


def disj_all(parts: Iterable[Formula]) -> Formula:
    """Left fold of \\/; the empty disjunction is the constant 0."""
    return _fold("or", parts, Const(ZERO))


def oplus_all(parts: Iterable[Formula]) -> Formula:
    """Left fold of +; the empty sum is the constant 0."""
    return _fold("oplus", parts, Const(ZERO))


def odot_all(parts: Iterable[Formula]) -> Formula:
    """Left fold of *; the empty product is the constant 1."""
    return _fold("odot", parts, Const(ONE))


def _fold(op: str, parts, empty: Formula) -> Formula:
    parts = list(parts)
    if not parts:
        return empty
    out = parts[0]
    for p in parts[1:]:
        out = App(op, (out, p))
    return out


# --- parsing -----------------------------------------------------------------

class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<const>c\(\s*-?\d+\s*(?:/\s*\d+\s*)?\))
      | (?P<op>/\\|\\/|->|=>|[~&+\-*()])
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<num>\d+)
    """,
    re.VERBOSE,
)

_BINARY_TOKENS = {
    "/\\": "and", "\\/": "or", "->": "imp", "=>": "imp_pi",
    "&": "and_strong", "+": "oplus", "-": "ominus", "*": "odot",
}


@dataclass
class _Token:
    kind: str       # "op" | "var" | "const" | "end"
    text: str
    value: object
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line, col = 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "ws":
            for ch in lexeme:
                if ch == "\n":
                    line, col = line + 1, 1
                else:
                    col += 1
            pos = m.end()
            continue
        if kind == "const":
            body = lexeme[2:-1].replace(" ", "")
            try:
                value = as_truth_value(Fraction(body))
            except (SemanticError, ValueError, ZeroDivisionError):
                raise ParseError(f"constant {lexeme} not a rational in [0,1]",
                                 line, col) from None
            tokens.append(_Token("const", lexeme, value, line, col))
        elif kind == "num":
            if lexeme == "0":
                tokens.append(_Token("const", lexeme, ZERO, line, col))
            elif lexeme == "1":
                tokens.append(_Token("const", lexeme, ONE, line, col))
            else:
                raise ParseError(f"bare number {lexeme}: write c({lexeme}/n)",
                                 line, col)
        elif kind == "name":
            if lexeme == "D":
                tokens.append(_Token("op", "D", None, line, col))
            else:
                tokens.append(_Token("var", lexeme, None, line, col))
        else:
            tokens.append(_Token("op", lexeme, None, line, col))
        col += len(lexeme)
        pos = m.end()
    tokens.append(_Token("end", "", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.column)

    def implication(self) -> Formula:
        left = self.additive()
        tok = self.peek()
        if tok.kind == "op" and tok.text in ("->", "=>"):
            self.advance()
            right = self.implication()  # right-associative
            return App(_BINARY_TOKENS[tok.text], (left, right))
        return left

    def additive(self) -> Formula:
        out = self.multiplicative()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in ("\\/", "+", "-"):
                self.advance()
                out = App(_BINARY_TOKENS[tok.text], (out, self.multiplicative()))
            else:
                return out

    def multiplicative(self) -> Formula:
        out = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in ("/\\", "&", "*"):
                self.advance()
                out = App(_BINARY_TOKENS[tok.text], (out, self.unary()))
            else:
                return out

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "~":
            self.advance()
            return App("neg", (self.unary(),))
        if tok.kind == "op" and tok.text == "D":
            self.advance()
            return App("delta", (self.unary(),))
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "var":
            self.advance()
            return Var(tok.text)
        if tok.kind == "const":
            self.advance()
            return Const(tok.value)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.implication()
            closing = self.peek()
            if not (closing.kind == "op" and closing.text == ")"):
                self.fail("expected ')'")
            self.advance()
            return inner
        self.fail(f"expected a formula, found {tok.text or 'end of input'!r}")


def parse(text: str) -> Formula:
    parser = _Parser(_tokenize(text))
    result = parser.implication()
    trailing = parser.peek()
    if trailing.kind != "end":
        parser.fail(f"trailing input {trailing.text!r}")
    return result


# --- printing ----------------------------------------------------------------

_OP_TOKEN = {name: tok for tok, name in _BINARY_TOKENS.items()}


def to_text(f: Formula) -> str:
    """Fully parenthesized canonical form; parse(to_text(f)) == f."""
    memo: dict[int, str] = {}

    def render(node: Formula) -> str:
        key = id(node)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if isinstance(node, Var):
            text = node.name
        elif isinstance(node, Const):
            if node.value == ZERO:
                text = "0"
            elif node.value == ONE:
                text = "1"
            else:
                text = f"c({node.value})"
        elif node.op == "neg":
            text = "~" + render(node.args[0])
        elif node.op == "delta":
            text = "D " + render(node.args[0])
        else:
            left, right = node.args
            text = f"({render(left)} {_OP_TOKEN[node.op]} {render(right)})"
        memo[key] = text
        return text

    return render(f)


# --- semantics ---------------------------------------------------------------

def evaluate(f: Formula, alg: Algebra, assignment: Mapping[str, Fraction]) -> Fraction:
    """Compositional value of `f` in `alg` under the assignment.

    Constants must lie in the algebra's domain; connectives must be in the
    signature, except that ~ may be expanded to its definition x -> 0 when
    the algebra lacks a native negation (Godel algebras).
    """
    memo: dict[int, Fraction] = {}

    def walk(node: Formula) -> Fraction:
        key = id(node)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if isinstance(node, Var):
            try:
                value = assignment[node.name]
            except KeyError:
                raise SemanticError(f"unknown variable {node.name!r}") from None
            if not alg.contains(value):
                raise SemanticError(
                    f"assignment {node.name} = {value} outside the domain of {alg.id}")
        elif isinstance(node, Const):
            value = node.value
            if not alg.contains(value):
                raise SemanticError(
                    f"constant {value} outside the domain of {alg.id}")
        else:
            op = ops.get(node.op)
            args = node.args
            if op is None:
                if node.op == "neg" and "imp" in ops:
                    value = ops["imp"](walk(args[0]), ZERO)
                else:
                    raise SemanticError(
                        f"connective {node.op!r} not in signature of {alg.id}")
            elif len(args) == 2:
                value = op(walk(args[0]), walk(args[1]))
            else:
                value = op(walk(args[0]))
        memo[key] = value
        return value

    ops = alg.ops
    return walk(f)


def free_variables(f: Formula) -> list[str]:
    """Variable names in first-occurrence, left-to-right order."""
    seen: set[str] = set()
    visited: set[int] = set()
    out: list[str] = []

    def walk(node: Formula):
        key = id(node)
        if key in visited:
            return
        visited.add(key)
        if isinstance(node, Var):
            if node.name not in seen:
                seen.add(node.name)
                out.append(node.name)
        elif isinstance(node, App):
            for a in node.args:
                walk(a)

    walk(f)
    return out


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Simultaneous substitution; variables outside the mapping are unchanged."""
    if not mapping:
        return f
    memo: dict[int, Formula] = {}

    def walk(node: Formula) -> Formula:
        key = id(node)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if isinstance(node, Var):
            result = mapping.get(node.name, node)
        elif isinstance(node, Const):
            result = node
        else:
            new_args = tuple(walk(a) for a in node.args)
            result = node if all(a is b for a, b in zip(new_args, node.args)) \
                else App(node.op, new_args)
        memo[key] = result
        return result

    return walk(f)


def substitute_values(f: Formula, values: Mapping[str, Fraction]) -> Formula:
    """Substitute rational constants for variables."""
    return substitute(f, {name: Const(as_truth_value(v)) for name, v in values.items()})
