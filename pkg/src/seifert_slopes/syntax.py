"""Text syntax shared by the CLI and the tests.

Grammar (whitespace is ignored inside brackets and parentheses)::

    fraction   := ["+" | "-"] digits ["/" ["-"] digits] | "inf"
    cf         := "[" [int ("," int)*] "]"
    slots      := slot ("," slot)*          slot := fraction ["*"]
    montesinos := "M(" [fraction ("," fraction)*] [";" int] ")"
    seifert    := "SFS(" int [";" fraction ("," fraction)*] ")"
"""
from __future__ import annotations

import re

from .exactarith import ContinuedFraction, ExtendedRational

_FRACTION = re.compile(r"[+-]?\d+(?:/[+-]?\d+)?|inf")
_INT = re.compile(r"[+-]?\d+")


class ParseError(ValueError):
    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        token = _token_at(text, position)
        self.token = token
        super().__init__(
            f"expected {expected} at position {position}, found {token!r} in {text!r}"
        )


def _token_at(text, position):
    if position >= len(text):
        return "<end>"
    m = re.match(r"[^\s,;()\[\]]+|.", text[position:])
    return m.group(0)


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal):
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise ParseError(self.text, self.pos, repr(literal))
        self.pos += len(literal)

    def match(self, pattern, expected):
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise ParseError(self.text, self.pos, expected)
        self.pos = m.end()
        return m.group(0)

    def fraction(self):
        start = self.pos
        token = self.match(_FRACTION, "a fraction p/q or 'inf'")
        if token == "inf":
            return ExtendedRational(1, 0)
        p, _, q = token.partition("/")
        if q and int(q) == 0 and int(p) == 0:
            raise ParseError(self.text, start, "a fraction other than 0/0")
        return ExtendedRational(int(p), int(q) if q else 1)

    def integer(self):
        return int(self.match(_INT, "an integer"))

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(self.text, self.pos, "end of input")


def parse_fraction(text: str) -> ExtendedRational:
    s = _Scanner(text)
    value = s.fraction()
    s.end()
    return value


def parse_finite_fraction(text: str) -> ExtendedRational:
    value = parse_fraction(text)
    if value.is_infinite:
        raise ParseError(text, text.find("inf"), "a finite fraction")
    return value


def parse_cf(text: str) -> ContinuedFraction:
    s = _Scanner(text)
    s.expect("[")
    terms = []
    if not s.peek("]"):
        terms.append(s.integer())
        while s.peek(","):
            s.expect(",")
            terms.append(s.integer())
    s.expect("]")
    s.end()
    return tuple(terms)


def parse_slots(text: str) -> tuple[list[ExtendedRational], set[int]]:
    """Parse ``"inf*,inf*,3/1"`` into fractions and the set of marked indices."""
    s = _Scanner(text)
    fractions, marks = [], set()
    while True:
        fractions.append(s.fraction())
        if s.peek("*"):
            s.expect("*")
            marks.add(len(fractions) - 1)
        if not s.peek(","):
            break
        s.expect(",")
    s.end()
    return fractions, marks


def _fraction_list(s, stop):
    items = []
    if s.peek(stop) or s.peek(")"):
        return items
    items.append(s.fraction())
    while s.peek(","):
        s.expect(",")
        items.append(s.fraction())
    return items


def parse_montesinos(text: str) -> tuple[list[ExtendedRational], int]:
    s = _Scanner(text)
    s.expect("M(")
    fractions = _fraction_list(s, ";")
    twist = 0
    if s.peek(";"):
        s.expect(";")
        twist = s.integer()
    s.expect(")")
    s.end()
    return fractions, twist


def parse_seifert(text: str) -> tuple[int, list[ExtendedRational]]:
    s = _Scanner(text)
    s.expect("SFS(")
    b = s.integer()
    fractions = []
    if s.peek(";"):
        s.expect(";")
        fractions = _fraction_list(s, ")")
    s.expect(")")
    s.end()
    return b, fractions
