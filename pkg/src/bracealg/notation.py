"""Text notation for brace polynomials.

Grammar (whitespace is insignificant)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := rational ['*' word] | word
    word     := IDENT | '<' word (',' word)* ';' word '>'
    rational := INT ['/' INT]

``⟨`` and ``⟩`` are accepted as synonyms of ``<`` and ``>``.  A bare rational
term must be zero: the algebra has no unit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Collection

from .algebra import Polynomial, normalize, product
from .words import Brace, GeneralWord, NormalWord, as_normal

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<sym>[<>⟨⟩,;*/+\-]))"
)
_OPEN = {"<", "⟨"}
_CLOSE = {">", "⟩"}


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


@dataclass
class _Tok:
    kind: str
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, letters: Collection[str] | None):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.letters = None if letters is None else set(letters)

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.tok.pos)

    def take(self, *values: str) -> _Tok | None:
        if self.tok.kind == "sym" and self.tok.value in values:
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, values: set[str], what: str) -> _Tok:
        t = self.take(*values)
        if t is None:
            self.error(f"expected {what}")
        return t

    def end(self):
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.value!r}")

    def word(self) -> GeneralWord:
        t = self.tok
        if t.kind == "ident":
            if self.letters is not None and t.value not in self.letters:
                self.error(f"unknown letter {t.value!r}")
            self.i += 1
            return t.value
        if self.take(*_OPEN):
            args = [self.word()]
            while self.take(","):
                args.append(self.word())
            self.expect({";"}, "';'")
            target = self.word()
            self.expect(_CLOSE, "'>'")
            return Brace(tuple(args), target)
        self.error("expected a letter or '<'")

    def rational(self) -> Fraction:
        num = int(self.tok.value)
        self.i += 1
        if self.take("/"):
            if self.tok.kind != "int":
                self.error("expected a denominator")
            den = int(self.tok.value)
            if den == 0:
                self.error("zero denominator")
            self.i += 1
            return Fraction(num, den)
        return Fraction(num)

    def term(self) -> tuple[Fraction, GeneralWord | None]:
        if self.tok.kind == "int":
            c = self.rational()
            if self.take("*"):
                return c, self.word()
            if c:
                self.error("a bare nonzero constant is not an element of the algebra")
            return c, None
        return Fraction(1), self.word()

    def expr(self) -> list[tuple[Fraction, GeneralWord | None]]:
        sign = -1 if self.take("-") else 1
        c, w = self.term()
        out = [(sign * c, w)]
        while True:
            op = self.take("+", "-")
            if op is None:
                return out
            c, w = self.term()
            out.append((c if op.value == "+" else -c, w))


def parse_terms(text: str, letters: Collection[str] | None = None) -> list[tuple[Fraction, GeneralWord | None]]:
    """Parse ``text`` into (coefficient, general word) pairs without normalizing."""
    p = _Parser(text, letters)
    out = p.expr()
    p.end()
    return out


def parse(text: str, letters: Collection[str] | None = None) -> Polynomial:
    """Parse and normalize an expression.

    ``letters`` restricts the identifiers that may appear.
    """
    acc = Polynomial.zero()
    for c, w in parse_terms(text, letters):
        if w is not None and c:
            acc = acc + normalize(w) * c
    return acc


def parse_word(text: str, letters: Collection[str] | None = None) -> NormalWord:
    """Parse text that must spell a single normal word."""
    p = _Parser(text, letters)
    w = p.word()
    p.end()
    n = as_normal(w)
    if n is None:
        raise ParseError("not a normal word", text, 0)
    return n


def parse_general_word(text: str, letters: Collection[str] | None = None) -> GeneralWord:
    p = _Parser(text, letters)
    w = p.word()
    p.end()
    return w


def parse_product(text: str, letters: Collection[str] | None = None) -> Polynomial:
    """Evaluate ``"A1,A2,...;T"`` as the brace product of the expressions."""
    depth = 0
    parts: list[str] = []
    start = 0
    semi = None
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
        elif depth == 0 and ch in ",;":
            if semi is not None:
                raise ParseError("text after the target", text, i)
            parts.append(text[start:i])
            start = i + 1
            if ch == ";":
                semi = i
    if semi is None:
        raise ParseError("expected ';' before the target", text, len(text))
    target = text[start:]
    args = [parse(p, letters) for p in parts]
    return product(args, parse(target, letters))


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_word(w: NormalWord, unicode: bool = False) -> str:
    s = str(w)
    return s.replace("<", "⟨").replace(">", "⟩") if unicode else s


def serialize(f: Polynomial, unicode: bool = False) -> str:
    """Canonical text: terms in decreasing order, ``1*`` omitted, lowest terms."""
    if not f:
        return "0"
    out = []
    for k, (w, c) in enumerate(f.items()):
        mag = abs(c)
        body = format_word(w, unicode) if mag == 1 else f"{format_rational(mag)}*{format_word(w, unicode)}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)
