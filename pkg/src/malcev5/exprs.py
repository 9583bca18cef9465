"""Parsing and structured output of element expressions.

Grammar (whitespace allowed between tokens)::

    element  :=  ['+'|'-'] term ( ('+'|'-') term )*
    term     :=  rational ['*'] [monomial]  |  monomial
    rational :=  uint ['/' uint]
    monomial :=  factor ( ['*'] factor )*
    factor   :=  letter ['^' uint]

Letters are ``a..e`` and must appear in strictly increasing order within a
monomial: ``ba`` is rejected rather than silently reordered, because the
generators do not commute and ``ba != ab``.  Both ASCII ``-`` and the
typographic minus U+2212 are accepted on input; output always uses ASCII.
Errors carry the UTF-8 byte offset of the offending token.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import LETTER_INDEX, UElement

_MINUS = {"-", "−"}
_SIGNS = {"+"} | _MINUS


class ParseError(ValueError):
    """Malformed element expression; ``offset`` is a UTF-8 byte position."""

    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode("utf-8"))
        super().__init__(f"parse error at byte {self.offset}: {message}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.n = len(text)
        self.i = 0

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.i if pos is None else pos)

    def skip_ws(self):
        while self.i < self.n and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        return self.text[self.i] if self.i < self.n else ""

    def uint(self, what: str) -> int:
        start = self.i
        while self.i < self.n and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            self.fail(f"expected {what}", start)
        return int(self.text[start:self.i])

    def rational(self) -> Fraction:
        num = self.uint("a number")
        save = self.i
        self.skip_ws()
        if self.peek() == "/":
            self.i += 1
            self.skip_ws()
            den_pos = self.i
            den = self.uint("a denominator")
            if den == 0:
                self.fail("zero denominator", den_pos)
            return Fraction(num, den)
        self.i = save
        return Fraction(num)

    def monomial(self) -> tuple:
        exps = [0, 0, 0, 0, 0]
        last = -1
        while True:
            pos = self.i
            ch = self.peek()
            v = LETTER_INDEX.get(ch)
            if v is None:
                self.fail(
                    f"unknown generator {ch!r}; expected one of a, b, c, d, e", pos
                )
            if v <= last:
                self.fail("monomial letters must be in order a..e", pos)
            last = v
            self.i += 1
            exp = 1
            if self.peek() == "^":
                self.i += 1
                exp = self.uint("an exponent after '^'")
            exps[v] = exp
            # another factor? '*' (spaces allowed) or direct juxtaposition
            save = self.i
            self.skip_ws()
            if self.peek() == "*":
                self.i += 1
                self.skip_ws()
                continue
            self.i = save
            if self.peek() in LETTER_INDEX:
                continue
            return tuple(exps)

    def term(self):
        ch = self.peek()
        if ch.isdigit():
            coeff = self.rational()
            save = self.i
            self.skip_ws()
            if self.peek() == "*":
                self.i += 1
                self.skip_ws()
                if self.peek() not in LETTER_INDEX:
                    self.fail("expected a monomial after '*'")
                return coeff, self.monomial()
            if self.peek() in LETTER_INDEX:
                return coeff, self.monomial()
            self.i = save
            return coeff, (0, 0, 0, 0, 0)
        if ch in LETTER_INDEX:
            return Fraction(1), self.monomial()
        if ch.isalpha():
            self.fail(f"unknown generator {ch!r}; expected one of a, b, c, d, e")
        self.fail("expected a term" if ch else "unexpected end of input")

    def parse(self, cls):
        self.skip_ws()
        if self.i == self.n:
            self.fail("empty expression")
        terms = []
        first = True
        while True:
            self.skip_ws()
            if self.i == self.n:
                break
            ch = self.peek()
            sign = 1
            if ch in _SIGNS:
                sign = -1 if ch in _MINUS else 1
                self.i += 1
                self.skip_ws()
            elif not first:
                self.fail("expected '+' or '-' between terms")
            coeff, mono = self.term()
            terms.append((mono, sign * coeff))
            first = False
        return cls(terms)


def parse_element(text: str, cls=UElement):
    """Parse canonical-form text into an element (``cls`` picks the algebra).

    Raises :class:`ParseError` for malformed input.  Constructing the
    element may additionally raise ``ValueError`` when a well-formed
    monomial is not a basis monomial of the target algebra.
    """
    return _Parser(text).parse(cls)


def element_json(el, with_type: bool = False) -> str:
    """Serialize an element as a JSON array of term objects.

    Terms follow the canonical display order; each is
    ``{"coeff": "p/q", "exp": [i, j, k, l, m]}``, plus a ``"type"`` field
    (1 or 2) for elements of the alternative quotient.
    """
    out = []
    for mono, coeff in el.sorted_terms():
        item = {"coeff": str(Fraction(coeff)), "exp": list(mono)}
        if with_type:
            item["type"] = 1 if mono[4] else 2
        out.append(item)
    return json.dumps(out)
