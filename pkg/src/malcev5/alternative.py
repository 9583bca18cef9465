"""The universal alternative quotient.

The alternator ideal of the enveloping algebra is generated (as an ideal)
by the two alternators it needs to kill, and works out to the span of every
basis monomial with ``e``-exponent at least 2 together with those with
``e``-exponent 1 and positive ``c``-exponent.  The quotient therefore has
the surviving monomials as a basis, in two families::

    type 1:  a^i b^j d^l e        (e-exponent 1, no c)
    type 2:  a^i b^j c^k d^l      (no e)

:class:`AElement` stores elements of the quotient on that basis, reusing the
exponent-5-tuple encoding (a type-1 monomial is any tuple with last entry 1
and middle entry 0; a type-2 tuple ends in 0).  The product :func:`mul_a`
is given in closed form per type pair; :func:`project` is the quotient map.
Both are cross-checked against the enveloping product: ``project`` after
:func:`~malcev5.envelope.mul_u` must equal :func:`mul_a` after ``project``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    LETTERS,
    ONE,
    Monomial,
    UElement,
    _SparseElement,
    bracket_m,
    MalcevVector,
    letter_monomial,
)


def in_ideal_j(mono: Monomial) -> bool:
    """True when the monomial lies in the alternator ideal.

    Membership depends only on the ``c``- and ``e``-exponents: everything
    with ``e^2`` or higher dies, as does anything with both a ``c`` and an
    ``e``.
    """
    return mono[4] >= 2 or (mono[4] == 1 and mono[2] >= 1)


def is_type1(mono: Monomial) -> bool:
    """Quotient basis monomial of the form ``a^i b^j d^l e``."""
    return mono[4] == 1 and mono[2] == 0


def is_type2(mono: Monomial) -> bool:
    """Quotient basis monomial of the form ``a^i b^j c^k d^l``."""
    return mono[4] == 0


class AElement(_SparseElement):
    """An element of the alternative quotient, on the surviving monomials."""

    __slots__ = ()

    @staticmethod
    def _check_basis(mono) -> None:
        _SparseElement._check_basis(mono)
        if in_ideal_j(mono):
            raise ValueError(
                f"{mono!r} lies in the alternator ideal and is not a basis "
                "monomial of the quotient"
            )

    @classmethod
    def one(cls) -> "AElement":
        return cls._make({ONE: 1})

    @classmethod
    def from_letter(cls, letter: str) -> "AElement":
        return cls._make({letter_monomial(letter): 1})


def project(x: UElement) -> AElement:
    """The quotient map: drop every term inside the alternator ideal."""
    return AElement._make(
        {mono: coeff for mono, coeff in x.terms.items() if not in_ideal_j(mono)}
    )


# ---------------------------------------------------------------------------
# the closed product
# ---------------------------------------------------------------------------

def _mul_a_mono(x: Monomial, y: Monomial):
    """Product of two quotient basis monomials, as a term dict."""
    if x[4]:
        if y[4]:
            # type1 * type1: the product lands entirely in the ideal
            return {}
        # type1 * type2 survives only when the type-2 factor has no c
        if y[2]:
            return {}
        return {(x[0] + y[0], x[1] + y[1], 0, x[3] + y[3], 1): 1}
    if y[4]:
        # type2 * type1, gated by the type-2 factor's c-exponent
        if x[2]:
            return {}
        return {(x[0] + y[0], x[1] + y[1], 0, x[3] + y[3], 1): 1}

    i, j, k, l, _ = x
    p, q, r, s, _ = y
    out = {}
    for mu in range(min(j, p) + 1):
        coeff = math.factorial(mu) * math.comb(j, mu) * math.comb(p, mu)
        out[(i + p - mu, j + q - mu, k + r + mu, l + s, 0)] = -coeff if mu & 1 else coeff
    if k == 0:
        if r == 0:
            num = i * j * s - i * l * q + 3 * j * l * p + 2 * j * p * s - 2 * l * p * q
            if num:
                # every factor of num vanishes when the corresponding
                # exponent is zero, so the shifts below never go negative
                out[(i + p - 1, j + q - 1, 0, l + s - 1, 1)] = Fraction(num, 6)
        elif r == 1 and l:
            out[(i + p, j + q, 0, l + s - 1, 1)] = -l
    return out


def mul_a(x: AElement, y: AElement) -> AElement:
    """Bilinear product on the quotient (closed structure constants)."""
    out: dict = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            c = cx * cy
            for mono, coeff in _mul_a_mono(mx, my).items():
                s = out.get(mono, 0) + c * coeff
                if s:
                    out[mono] = s
                elif mono in out:
                    del out[mono]
    return AElement._make(out)


def associator_a(x: AElement, y: AElement, z: AElement) -> AElement:
    """Associator ``(xy)z - x(yz)`` on the quotient."""
    return mul_a(mul_a(x, y), z) - mul_a(x, mul_a(y, z))


def type2_associator_closed(x: Monomial, y: Monomial, z: Monomial) -> AElement:
    """Closed form of the associator of three type-2 basis monomials.

    Nonzero only when none of the three factors carries a ``c``, in which
    case it is an explicitly alternating trilinear coefficient times a
    single type-1 monomial.  Used as the oracle for :func:`associator_a`
    on type-2 arguments.
    """
    for mono in (x, y, z):
        if not is_type2(mono):
            raise ValueError(f"{mono!r} is not a type-2 basis monomial")
    i, j, k, l, _ = x
    p, q, r, s, _ = y
    v, w, g, u, _ = z
    if k or r or g:
        return AElement.zero()
    num = i * q * u - i * s * w - j * p * u + j * s * v + l * p * w - l * q * v
    if not num:
        return AElement.zero()
    mono = (i + p + v - 1, j + q + w - 1, 0, l + s + u - 1, 1)
    return AElement._make({mono: Fraction(num, 6)})


# ---------------------------------------------------------------------------
# speciality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecialityReport:
    """Outcome of the injectivity/speciality sanity checks on the quotient."""

    passed: bool
    failures: tuple = ()


def check_speciality() -> SpecialityReport:
    """Verify that the base algebra survives inside the quotient.

    Two things must hold: no degree-1 monomial lies in the alternator
    ideal (the quotient map is injective on the base algebra), and the
    commutator of the quotient restricted to degree-1 elements reproduces
    the defining brackets -- i.e. the base algebra embeds as a subalgebra
    of the commutator algebra of an alternative algebra.
    """
    failures = []
    for ch in LETTERS:
        if in_ideal_j(letter_monomial(ch)):
            failures.append(f"degree-1 monomial {ch} lies in the alternator ideal")
    for chx in LETTERS:
        for chy in LETTERS:
            x = AElement.from_letter(chx)
            y = AElement.from_letter(chy)
            comm = mul_a(x, y) - mul_a(y, x)
            expected = project(
                bracket_m(MalcevVector.basis(chx), MalcevVector.basis(chy)).u_element()
            )
            if comm != expected:
                failures.append(
                    f"[{chx},{chy}] in the quotient is {comm}, expected {expected}"
                )
    return SpecialityReport(passed=not failures, failures=tuple(failures))
