"""Exact arithmetic foundations.

The base algebra is the five-dimensional nilpotent Malcev algebra: ordered
basis ``a < b < c < d < e`` with the only nonzero brackets ``[a,b] = c`` and
``[c,d] = e`` (extended antisymmetrically).  Its enveloping algebra has the
ordered monomials ``a^i b^j c^k d^l e^m`` as a linear basis, so a monomial
is an exponent 5-tuple and an element is a sparse map from tuples to exact
rational coefficients.  No floating point appears anywhere in the package;
coefficients are ``fractions.Fraction`` or plain ``int``.

This module owns the shared vocabulary: letters, monomials, the graded-lex
term order, combinatorial helpers with the vanishing conventions used by the
closed formulas, vectors of the base algebra, and the sparse linear
combination type that the other modules build on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

LETTERS = "abcde"
LETTER_INDEX = {ch: i for i, ch in enumerate(LETTERS)}

# A monomial is the exponent tuple (i, j, k, l, m) of a^i b^j c^k d^l e^m.
Monomial = tuple[int, int, int, int, int]

#: the empty monomial, i.e. the unit of the enveloping algebra
ONE: Monomial = (0, 0, 0, 0, 0)


class ComputationError(RuntimeError):
    """An evaluation strategy could not finish (e.g. recursion exhausted)."""


def monomial(i: int, j: int, k: int, l: int, m: int) -> Monomial:
    """Build a validated exponent tuple."""
    mono = (i, j, k, l, m)
    _check_monomial(mono)
    return mono


def _check_monomial(mono) -> None:
    if not (isinstance(mono, tuple) and len(mono) == 5):
        raise ValueError(f"monomial must be a 5-tuple of exponents, got {mono!r}")
    for v in mono:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"exponents must be nonnegative integers, got {mono!r}")


def degree(mono: Monomial) -> int:
    """Total degree of a monomial (sum of exponents)."""
    return sum(mono)


def term_key(mono: Monomial):
    """Sort key for the canonical graded-lexicographic order.

    Terms are displayed by descending degree, ties broken by descending
    exponent tuple, so products lead with their highest-degree part and the
    constant term comes last.
    """
    return (sum(mono), mono)


def letter_monomial(letter: str) -> Monomial:
    """The degree-one monomial for a single generator letter."""
    v = LETTER_INDEX.get(letter)
    if v is None:
        raise ValueError(f"unknown generator {letter!r}; expected one of {LETTERS!r}")
    return tuple(1 if t == v else 0 for t in range(5))


# ---------------------------------------------------------------------------
# combinatorics with vanishing conventions
# ---------------------------------------------------------------------------

def falling_factorial(n: int, k: int) -> int:
    """``n (n-1) ... (n-k+1)``; equals 1 when k == 0 and 0 when k > n >= 0."""
    return math.perm(n, k)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts) -> int:
    """``n! / (p_1! ... p_r! (n - sum p)!)``.

    Follows the convention used by all the closed formulas here: the value
    is 0 whenever any part is negative or the parts sum to more than ``n``.
    """
    if n < 0:
        return 0
    used = 0
    out = 1
    for p in parts:
        if p < 0 or used + p > n:
            return 0
        out *= math.comb(n - used, p)
        used += p
    return out


# ---------------------------------------------------------------------------
# the base algebra
# ---------------------------------------------------------------------------

class MalcevVector:
    """A vector of the base algebra: rational coordinates over a, b, c, d, e."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        if len(coords) != 5:
            raise ValueError(f"expected 5 coordinates, got {len(coords)}")
        for v in coords:
            if not isinstance(v, Rational):
                raise TypeError(f"coordinates must be rational, got {v!r}")
        self.coords = coords

    @classmethod
    def basis(cls, letter: str) -> "MalcevVector":
        v = LETTER_INDEX.get(letter)
        if v is None:
            raise ValueError(f"unknown generator {letter!r}")
        return cls(tuple(1 if t == v else 0 for t in range(5)))

    @classmethod
    def zero(cls) -> "MalcevVector":
        return cls((0, 0, 0, 0, 0))

    def u_element(self) -> "UElement":
        """The image of this vector under the canonical degree-1 embedding."""
        terms = {}
        for v, coeff in enumerate(self.coords):
            if coeff:
                terms[tuple(1 if t == v else 0 for t in range(5))] = coeff
        return UElement._make(terms)

    def __add__(self, other):
        if not isinstance(other, MalcevVector):
            return NotImplemented
        return MalcevVector(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, MalcevVector):
            return NotImplemented
        return MalcevVector(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return MalcevVector(tuple(-x for x in self.coords))

    def __rmul__(self, scalar):
        if not isinstance(scalar, Rational):
            return NotImplemented
        return MalcevVector(tuple(scalar * x for x in self.coords))

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, MalcevVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        parts = [f"{coeff!s}*{LETTERS[v]}" for v, coeff in enumerate(self.coords) if coeff]
        return "MalcevVector<%s>" % (" + ".join(parts) if parts else "0")


def bracket_m(x: MalcevVector, y: MalcevVector) -> MalcevVector:
    """Bracket of the base algebra: bilinear extension of [a,b]=c, [c,d]=e."""
    xa, xb, xc, xd, _ = x.coords
    ya, yb, yc, yd, _ = y.coords
    return MalcevVector((0, 0, xa * yb - xb * ya, 0, xc * yd - xd * yc))


def jacobian_m(x: MalcevVector, y: MalcevVector, z: MalcevVector) -> MalcevVector:
    """J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y] on the base algebra.

    Not identically zero -- J(a,b,d) = e -- which is exactly why the
    enveloping algebra below is nonassociative.
    """
    return (
        bracket_m(bracket_m(x, y), z)
        + bracket_m(bracket_m(y, z), x)
        + bracket_m(bracket_m(z, x), y)
    )


# ---------------------------------------------------------------------------
# sparse linear combinations
# ---------------------------------------------------------------------------

class _SparseElement:
    """Shared machinery for exact sparse linear combinations of monomials.

    Zero coefficients are never stored, so equality is plain comparison of
    the term maps.  Instances are immutable by contract: nothing in the
    package mutates ``terms`` after construction, which is what makes every
    value here safe to share across threads and to memoize.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        data = {}
        for mono, coeff in items:
            self._check_basis(mono)
            if not isinstance(coeff, Rational):
                raise TypeError(f"coefficients must be rational, got {coeff!r}")
            if coeff:
                data[mono] = data.get(mono, 0) + coeff
                if not data[mono]:
                    del data[mono]
        self.terms = data

    @staticmethod
    def _check_basis(mono) -> None:
        _check_monomial(mono)

    @classmethod
    def _make(cls, clean: dict):
        # Internal fast path: `clean` must already be validated and pruned.
        el = object.__new__(cls)
        el.terms = clean
        return el

    @classmethod
    def zero(cls):
        return cls._make({})

    @classmethod
    def from_monomial(cls, mono, coeff=1):
        return cls({mono: coeff})

    def sorted_terms(self):
        """Terms in the canonical (graded-lex descending) display order."""
        return sorted(self.terms.items(), key=lambda t: term_key(t[0]), reverse=True)

    def coefficient(self, mono) -> Rational:
        return self.terms.get(mono, 0)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        return type(self)._make(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, 0) - coeff
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        return type(self)._make(out)

    def __neg__(self):
        return type(self)._make({mono: -coeff for mono, coeff in self.terms.items()})

    def __rmul__(self, scalar):
        if not isinstance(scalar, Rational):
            return NotImplemented
        if not scalar:
            return type(self)._make({})
        return type(self)._make(
            {mono: scalar * coeff for mono, coeff in self.terms.items()}
        )

    __mul__ = __rmul__

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return format_terms(self.sorted_terms())

    def __repr__(self):
        return f"{type(self).__name__}({self.terms!r})"


class UElement(_SparseElement):
    """An element of the enveloping algebra in the ordered-monomial basis."""

    __slots__ = ()

    @classmethod
    def one(cls) -> "UElement":
        return cls._make({ONE: 1})

    @classmethod
    def from_letter(cls, letter: str) -> "UElement":
        return cls._make({letter_monomial(letter): 1})

    def max_degree(self) -> int:
        """Degree of the element (largest monomial degree; -1 for zero)."""
        if not self.terms:
            return -1
        return max(sum(mono) for mono in self.terms)


# ---------------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------------

def format_monomial(mono: Monomial) -> str:
    """``(1,1,0,2,0)`` -> ``abd^2``; the empty monomial prints as ``1``."""
    parts = []
    for letter, exp in zip(LETTERS, mono):
        if exp == 1:
            parts.append(letter)
        elif exp > 1:
            parts.append(f"{letter}^{exp}")
    return "".join(parts) if parts else "1"


def format_terms(sorted_items) -> str:
    """Render ``[(mono, coeff), ...]`` (already ordered) as canonical text."""
    if not sorted_items:
        return "0"
    chunks = []
    for n, (mono, coeff) in enumerate(sorted_items):
        coeff = Fraction(coeff)
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if mono == ONE:
            body = str(mag)
        elif mag == 1:
            body = format_monomial(mono)
        else:
            body = f"{mag} {format_monomial(mono)}"
        if n == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)
