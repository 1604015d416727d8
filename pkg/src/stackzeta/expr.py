"""Expression parsing for the CLI and the JSON round-trip surfaces.

One small grammar covers classes, E-polynomials, and series:

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'

Exponents are integer literals only.  The same syntax elaborates in three
contexts, which differ in the symbols they admit: class expressions know
L, q = L^{-1} and the constructors GL(n), BGL(n), Gr(k, n); polynomial
expressions know u and v (no division); series expressions additionally
know T, with division restricted to T-free invertible divisors.  The
canonical renderings produced by this package parse back to equal values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ElaborationError, NonInvertibleError, ParseError
from .motivic import MotivicClass, bgl_class, gl_class, grassmannian_class
from .multipoly import MultiPoly
from .series import TruncatedSeries
from .zeta import MOTIVIC

# -- tokens ----------------------------------------------------------------------

_OPS = set("+-*/^(),")


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, END
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _OPS:
            out.append(Token("OP", ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    out.append(Token("END", "", line, col))
    return out


# -- syntax tree -------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    tok: Token


@dataclass(frozen=True)
class Sym:
    name: str
    tok: Token


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    tok: Token


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    tok: Token


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    tok: Token


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "OP" or tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.line, tok.col)
        return self.next()

    def at_op(self, *texts: str) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text in texts

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(f"unexpected {tok.text!r} after expression", tok.line, tok.col)
        return node

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            tok = self.next()
            node = BinOp(tok.text, node, self.term(), tok)
        return node

    def term(self):
        node = self.factor()
        while self.at_op("*", "/"):
            tok = self.next()
            node = BinOp(tok.text, node, self.factor(), tok)
        return node

    def factor(self):
        if self.at_op("-"):
            self.next()
            return Neg(self.factor())
        return self.power()

    def power(self):
        node = self.atom()
        if self.at_op("^"):
            tok = self.next()
            sign = 1
            if self.at_op("-"):
                self.next()
                sign = -1
            itok = self.peek()
            if itok.kind != "INT":
                raise ParseError("exponent must be an integer literal", itok.line, itok.col)
            self.next()
            node = Pow(node, sign * int(itok.text), tok)
        return node

    def atom(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            return Num(int(tok.text), tok)
        if tok.kind == "NAME":
            self.next()
            if self.at_op("("):
                self.next()
                args = [self.expr()]
                while self.at_op(","):
                    self.next()
                    args.append(self.expr())
                self.expect_op(")")
                return Call(tok.text, tuple(args), tok)
            return Sym(tok.text, tok)
        if tok.kind == "OP" and tok.text == "(":
            self.next()
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.line, tok.col)


def parse_ast(text: str):
    return _Parser(tokenize(text)).parse()


# -- elaboration --------------------------------------------------------------------


def _int_literal(node, what: str) -> int:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg) and isinstance(node.operand, Num):
        return -node.operand.value
    raise ElaborationError(f"{what} arguments must be integer literals")


class _Env:
    """Shared tree-walk; contexts override the symbol table and the edges."""

    context = "expression"

    def run(self, node):
        if isinstance(node, Num):
            return self.of_int(node.value)
        if isinstance(node, Sym):
            return self.symbol(node)
        if isinstance(node, Call):
            return self.call(node)
        if isinstance(node, Neg):
            return -self.run(node.operand)
        if isinstance(node, Pow):
            return self.pow(self.run(node.base), node.exponent, node.tok)
        if isinstance(node, BinOp):
            left = self.run(node.left)
            right = self.run(node.right)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            return self.div(left, right, node.tok)
        raise ElaborationError(f"cannot elaborate {node!r}")

    def of_int(self, n: int):
        raise NotImplementedError

    def symbol(self, node: Sym):
        raise ElaborationError(
            f"unknown identifier {node.name!r} in a {self.context}", node.tok.line, node.tok.col
        )

    def call(self, node: Call):
        raise ElaborationError(
            f"{node.name!r} is not available in a {self.context}", node.tok.line, node.tok.col
        )

    def div(self, a, b, tok: Token):
        raise ElaborationError(f"division is not allowed in a {self.context}", tok.line, tok.col)

    def pow(self, a, n: int, tok: Token):
        if n < 0:
            raise ElaborationError(f"negative exponents are not allowed in a {self.context}", tok.line, tok.col)
        return a ** n


_CONSTRUCTOR_ARITY = {"GL": 1, "BGL": 1, "Gr": 2}


class _ClassEnv(_Env):
    context = "class expression"

    def of_int(self, n: int):
        return MotivicClass(n)

    def symbol(self, node: Sym):
        if node.name == "L":
            return MotivicClass.l_power(1)
        if node.name == "q":
            return MotivicClass.l_power(-1)
        return super().symbol(node)

    def call(self, node: Call):
        arity = _CONSTRUCTOR_ARITY.get(node.name)
        if arity is None:
            return super().call(node)
        if len(node.args) != arity:
            raise ElaborationError(
                f"{node.name} takes {arity} argument(s)", node.tok.line, node.tok.col
            )
        args = [_int_literal(a, node.name) for a in node.args]
        try:
            if node.name == "GL":
                return gl_class(args[0])
            if node.name == "BGL":
                return bgl_class(args[0])
            return grassmannian_class(args[0], args[1])
        except DomainError as exc:
            raise ElaborationError(str(exc), node.tok.line, node.tok.col) from exc

    def div(self, a, b, tok: Token):
        try:
            return a / b
        except NonInvertibleError as exc:
            raise ElaborationError(str(exc), tok.line, tok.col) from exc

    def pow(self, a, n: int, tok: Token):
        try:
            return a ** n
        except NonInvertibleError as exc:
            raise ElaborationError(str(exc), tok.line, tok.col) from exc


class _PolyEnv(_Env):
    context = "polynomial expression"

    def of_int(self, n: int):
        return MultiPoly.constant(2, n)

    def symbol(self, node: Sym):
        if node.name == "u":
            return MultiPoly.variable(2, 0)
        if node.name == "v":
            return MultiPoly.variable(2, 1)
        return super().symbol(node)


class _SeriesEnv(_Env):
    context = "series expression"

    def __init__(self, order: int):
        if order < 0:
            raise DomainError("series order must be nonnegative")
        self.order = order
        self.classes = _ClassEnv()

    def _constant(self, c: MotivicClass) -> TruncatedSeries:
        return TruncatedSeries.constant(MOTIVIC, c, self.order)

    def of_int(self, n: int):
        return self._constant(MotivicClass(n))

    def symbol(self, node: Sym):
        if node.name == "T":
            coeffs = [MotivicClass.zero()] * (self.order + 1)
            if self.order >= 1:
                coeffs[1] = MotivicClass.one()
            else:
                raise ElaborationError("T does not fit in an order-0 series", node.tok.line, node.tok.col)
            return TruncatedSeries(MOTIVIC, tuple(coeffs))
        return self._constant(self.classes.symbol(node))

    def call(self, node: Call):
        return self._constant(self.classes.call(node))

    @staticmethod
    def _t_free(s: TruncatedSeries) -> MotivicClass | None:
        if all(c.is_zero for c in s.coefficients[1:]):
            return s.coefficients[0]
        return None

    def div(self, a, b, tok: Token):
        c = self._t_free(b)
        if c is None:
            raise ElaborationError("series division needs a T-free divisor", tok.line, tok.col)
        try:
            return a * self._constant(c.inverse())
        except NonInvertibleError as exc:
            raise ElaborationError(str(exc), tok.line, tok.col) from exc

    def pow(self, a, n: int, tok: Token):
        if n >= 0:
            return a ** n
        c = self._t_free(a)
        if c is None:
            raise ElaborationError(
                "negative powers need a T-free invertible base", tok.line, tok.col
            )
        try:
            return self._constant(c.inverse() ** (-n))
        except NonInvertibleError as exc:
            raise ElaborationError(str(exc), tok.line, tok.col) from exc


def parse_class(text: str) -> MotivicClass:
    """Elaborate a class expression in L, q, GL, BGL, Gr."""
    return _ClassEnv().run(parse_ast(text))


def parse_poly(text: str) -> MultiPoly:
    """Elaborate an E-polynomial expression in u, v."""
    return _PolyEnv().run(parse_ast(text))


def parse_series(text: str, order: int) -> TruncatedSeries:
    """Elaborate a series expression in T with motivic-class coefficients."""
    return _SeriesEnv(order).run(parse_ast(text))


def mentioned_names(text: str) -> set[str]:
    """The identifiers appearing in an expression, for context dispatch."""
    return {tok.text for tok in tokenize(text) if tok.kind == "NAME"}
