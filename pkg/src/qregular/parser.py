"""Parser for quaternionic polynomial expressions.

Grammar (multiplication is noncommutative and left-associative)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | factor
    factor := atom ('^' uint)?
    atom   := number | 'i' | 'j' | 'k' | 'z1' | 'z2'
            | 'conj' '(' expr ')' | '(' expr ')'

Division is only allowed by a nonzero constant; it multiplies on the right
by the inverse.  ``conj`` is quaternion conjugation applied pointwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .hstructures import QI, QJ, QK, Quaternion
from .qpolynomial import CPoly, QFunction, Z1, Z2


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NonPolynomialError(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:\.\d+)?|\.\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_OPS = set("+-*/^()")


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            break
        number, name, op = m.groups()
        start = m.start(m.lastindex) if m.lastindex else pos
        if number is not None:
            tokens.append(Token("num", number, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        elif op is not None:
            if op not in _OPS:
                raise ParseError(f"unexpected character {op!r}", start)
            tokens.append(Token("op", op, start))
        pos = m.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


def quaternion_conj(f: QFunction) -> QFunction:
    # conj(f1 + f2 j) = conj(f1) - f2 j
    return QFunction(f.f1.conj(), -f.f2)


_UNITS = {"i": QI, "j": QJ, "k": QK}
_VARIABLES = {"z1": Z1, "z2": Z2}


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.advance()
        if tok.text != text or tok.kind == "end":
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    def parse(self) -> QFunction:
        result = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return result

    def expr(self) -> QFunction:
        left = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.advance().text
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self) -> QFunction:
        left = self.unary()
        while self.peek().kind == "op" and self.peek().text in ("*", "/"):
            op = self.advance()
            right = self.unary()
            if op.text == "*":
                left = left * right
            else:
                left = left * _inverse_constant(right, op.pos)
        return left

    def unary(self) -> QFunction:
        tok = self.peek()
        if tok.kind == "op" and tok.text in ("+", "-"):
            self.advance()
            operand = self.unary()
            return -operand if tok.text == "-" else operand
        return self.factor()

    def factor(self) -> QFunction:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            caret = self.advance()
            tok = self.advance()
            if tok.kind == "op" and tok.text == "-":
                raise NonPolynomialError("negative exponents are not polynomial", tok.pos)
            if tok.kind != "num" or not tok.text.isdigit():
                raise NonPolynomialError("exponent must be a nonnegative integer", tok.pos or caret.pos)
            base = base ** int(tok.text)
        return base

    def atom(self) -> QFunction:
        tok = self.advance()
        if tok.kind == "num":
            return QFunction(CPoly.constant(Fraction(tok.text)))
        if tok.kind == "name":
            if tok.text in _UNITS:
                return QFunction.constant(_UNITS[tok.text])
            if tok.text in _VARIABLES:
                return QFunction(_VARIABLES[tok.text])
            if tok.text == "conj":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return quaternion_conj(inner)
            if self.peek().text == "(":
                raise NonPolynomialError(f"unsupported function {tok.text!r}", tok.pos)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def _inverse_constant(f: QFunction, pos: int) -> QFunction:
    if not f.is_constant():
        raise NonPolynomialError("division by a non-constant expression", pos)
    q = Quaternion.from_complex_pair(f.f1.constant_term(), f.f2.constant_term())
    n = q.norm2()
    if n == 0:
        raise ParseError("division by zero", pos)
    return QFunction.constant(q.conjugate() * (1 / n))


def parse_function(text: str) -> QFunction:
    """Parse an expression into its normal form f1 + f2 j."""
    return _Parser(text).parse()


def parse_constant(text: str) -> Quaternion:
    f = parse_function(text)
    if not f.is_constant():
        raise NonPolynomialError("expected a constant", 0)
    return Quaternion.from_complex_pair(f.f1.constant_term(), f.f2.constant_term())
