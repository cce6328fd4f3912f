"""Tokenizer and recursive-descent parser for the expression language.

Grammar (left associative, usual precedence)::

    sum   := prod (("+" | "-") prod)*
    prod  := unary (("*" | "/") unary)*
    unary := "-" unary | atom
    atom  := UP "(" sum ")" | DOWN "(" sum ")" | "|" sum "|" | "(" sum ")"
           | NUMBER | NUMBER I | I

``NUMBER I`` only when the two tokens touch ("3i", not "3 i").
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import LexError, ParseError
from .exact import Rational

NUMBER = "NUMBER"
I = "I"
UP = "UP"
DOWN = "DOWN"
PLUS = "PLUS"
MINUS = "MINUS"
STAR = "STAR"
SLASH = "SLASH"
PIPE = "PIPE"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
EOF = "EOF"

_PUNCT = {
    "+": PLUS,
    "-": MINUS,
    "*": STAR,
    "/": SLASH,
    "|": PIPE,
    "(": LPAREN,
    ")": RPAREN,
    "↑": UP,
    "↓": DOWN,
}
_WORDS = {"up": UP, "down": DOWN, "i": I}
_NUMBER_RE = re.compile(r"[0-9]+(?:\.[0-9]+)?")
_WORD_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    position: int  # byte offset into the UTF-8 source

    @property
    def end(self) -> int:
        return self.position + len(self.lexeme.encode("utf-8"))


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0  # character index
    offset = 0  # byte offset
    while pos < len(source):
        ch = source[pos]
        if ch.isspace():
            pos += 1
            offset += len(ch.encode("utf-8"))
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, offset))
            pos += 1
            offset += len(ch.encode("utf-8"))
            continue
        m = _NUMBER_RE.match(source, pos) or _WORD_RE.match(source, pos)
        if m is None:
            raise LexError(f"unexpected character {ch!r}", offset)
        text = m.group()
        if text[0].isdigit():
            kind = NUMBER
        elif text in _WORDS:
            kind = _WORDS[text]
        else:
            raise LexError(f"unknown word {text!r}", offset)
        tokens.append(Token(kind, text, offset))
        pos = m.end()
        offset += len(text)
    tokens.append(Token(EOF, "", offset))
    return tokens


@dataclass(frozen=True)
class Number:
    value: Rational


@dataclass(frozen=True)
class ImagUnit:
    pass


@dataclass(frozen=True)
class Up:
    operand: "Expr"


@dataclass(frozen=True)
class Down:
    operand: "Expr"


@dataclass(frozen=True)
class Abs:
    operand: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


Expr = Union[Number, ImagUnit, Up, Down, Abs, Neg, Add, Sub, Mul, Div]

_DESCRIBE = {
    NUMBER: "a number",
    I: "'i'",
    UP: "'up'",
    DOWN: "'down'",
    PLUS: "'+'",
    MINUS: "'-'",
    STAR: "'*'",
    SLASH: "'/'",
    PIPE: "'|'",
    LPAREN: "'('",
    RPAREN: "')'",
    EOF: "end of input",
}


class _Parser:
    def __init__(self, tokens):
        if not tokens or tokens[-1].kind != EOF:
            raise ValueError("token stream must end with EOF")
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != EOF:
            self.i += 1
        return t

    def error(self, *expected):
        what = " or ".join(_DESCRIBE[k] for k in expected)
        found = _DESCRIBE[self.tok.kind] if self.tok.kind == EOF else repr(self.tok.lexeme)
        raise ParseError(f"expected {what}, found {found}", self.tok.position)

    def expect(self, kind) -> Token:
        if self.tok.kind != kind:
            self.error(kind)
        return self.advance()

    def parse(self) -> Expr:
        e = self.sum()
        if self.tok.kind != EOF:
            self.error(PLUS, MINUS, STAR, SLASH, EOF)
        return e

    def sum(self) -> Expr:
        e = self.prod()
        while self.tok.kind in (PLUS, MINUS):
            op = self.advance().kind
            rhs = self.prod()
            e = Add(e, rhs) if op == PLUS else Sub(e, rhs)
        return e

    def prod(self) -> Expr:
        e = self.unary()
        while self.tok.kind in (STAR, SLASH):
            op = self.advance().kind
            rhs = self.unary()
            e = Mul(e, rhs) if op == STAR else Div(e, rhs)
        return e

    def unary(self) -> Expr:
        if self.tok.kind == MINUS:
            self.advance()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        t = self.tok
        if t.kind in (UP, DOWN):
            self.advance()
            self.expect(LPAREN)
            inner = self.sum()
            self.expect(RPAREN)
            return Up(inner) if t.kind == UP else Down(inner)
        if t.kind == PIPE:
            self.advance()
            inner = self.sum()
            self.expect(PIPE)
            return Abs(inner)
        if t.kind == LPAREN:
            self.advance()
            inner = self.sum()
            self.expect(RPAREN)
            return inner
        if t.kind == NUMBER:
            self.advance()
            value = Number(Rational(t.lexeme))
            if self.tok.kind == I and self.tok.position == t.end:
                self.advance()
                return Mul(value, ImagUnit())
            return value
        if t.kind == I:
            self.advance()
            return ImagUnit()
        self.error(NUMBER, I, UP, DOWN, PIPE, LPAREN, MINUS)


def parse(tokens: list[Token]) -> Expr:
    return _Parser(tokens).parse()


def parse_text(source: str) -> Expr:
    return parse(tokenize(source))
