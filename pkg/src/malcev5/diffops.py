"""Differential operators on the polynomial model of the enveloping algebra.

Left and right multiplication by the five generators act on the underlying
polynomial space as differential operators with polynomial coefficients.
An :class:`Operator` is a finite rational combination of *normal-ordered
words*

    ``M_a^p1 M_b^p2 M_c^p3 M_d^p4 M_e^p5  D_a^q1 D_b^q2 D_c^q3 D_d^q4``

where ``M_x`` multiplies by the letter ``x`` and ``D_x`` differentiates with
respect to it; all multiplications stand to the left of all derivations.
No ``D_e`` slot exists: none of the operators realized here ever
differentiates in the central letter, and the normal form rejects it
outright.  The only nontrivial commutation is ``[D_x, M_x] = 1``; distinct
letters commute, which is what :func:`compose` exploits to renormalize
products of words.

The generator tables :func:`rho` (right multiplication) and :func:`lmul`
(left multiplication) are the bridge between the recursive product oracle
and the closed structure-constant formula: left multiplication by a whole
monomial is assembled either from a nine-index closed expansion
(:func:`l_of_monomial`) or by composing standard words
(:func:`l_of_monomial_via_factors`), and the two must agree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as _iterproduct
from numbers import Rational

from .core import (
    LETTER_INDEX,
    LETTERS,
    UElement,
    binomial,
    multinomial,
)

#: index of each differentiable letter in the derivation part of a word
DERIV_LETTERS = "abcd"

# An operator word is a pair (mul, der): mul is a 5-tuple of M-exponents
# over a..e, der a 4-tuple of D-exponents over a..d.
Word = tuple[tuple[int, int, int, int, int], tuple[int, int, int, int]]

_IDENTITY_WORD: Word = ((0, 0, 0, 0, 0), (0, 0, 0, 0))


def _check_word(word) -> None:
    ok = (
        isinstance(word, tuple)
        and len(word) == 2
        and isinstance(word[0], tuple)
        and isinstance(word[1], tuple)
        and len(word[0]) == 5
        and len(word[1]) == 4
        and all(isinstance(v, int) and v >= 0 for v in word[0])
        and all(isinstance(v, int) and v >= 0 for v in word[1])
    )
    if not ok:
        raise ValueError(f"malformed operator word {word!r}")


class Operator:
    """A normal-ordered differential operator with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        data = {}
        for word, coeff in items:
            _check_word(word)
            if not isinstance(coeff, Rational):
                raise TypeError(f"coefficients must be rational, got {coeff!r}")
            if coeff:
                data[word] = data.get(word, 0) + coeff
                if not data[word]:
                    del data[word]
        self.terms = data

    @classmethod
    def _make(cls, clean: dict) -> "Operator":
        op = object.__new__(cls)
        op.terms = clean
        return op

    @classmethod
    def zero(cls) -> "Operator":
        return cls._make({})

    @classmethod
    def identity(cls) -> "Operator":
        return cls._make({_IDENTITY_WORD: 1})

    @classmethod
    def word(cls, mul, der, coeff=1) -> "Operator":
        """A single word ``coeff * M^mul D^der``."""
        return cls({(tuple(mul), tuple(der)): coeff})

    @classmethod
    def mul_by(cls, letter: str) -> "Operator":
        """The multiplication operator ``M_letter``."""
        v = LETTER_INDEX.get(letter)
        if v is None:
            raise ValueError(f"unknown generator {letter!r}")
        return cls._make({(tuple(1 if t == v else 0 for t in range(5)), (0, 0, 0, 0)): 1})

    @classmethod
    def deriv(cls, letter: str) -> "Operator":
        """The derivation ``D_letter``; the central letter has no derivation."""
        v = LETTER_INDEX.get(letter)
        if v is None:
            raise ValueError(f"unknown generator {letter!r}")
        if v == 4:
            raise ValueError("no derivation in the central letter e")
        return cls._make({((0, 0, 0, 0, 0), tuple(1 if t == v else 0 for t in range(4))): 1})

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            s = out.get(word, 0) + coeff
            if s:
                out[word] = s
            elif word in out:
                del out[word]
        return Operator._make(out)

    def __sub__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            s = out.get(word, 0) - coeff
            if s:
                out[word] = s
            elif word in out:
                del out[word]
        return Operator._make(out)

    def __neg__(self):
        return Operator._make({w: -c for w, c in self.terms.items()})

    def __rmul__(self, scalar):
        if not isinstance(scalar, Rational):
            return NotImplemented
        if not scalar:
            return Operator._make({})
        return Operator._make({w: scalar * c for w, c in self.terms.items()})

    __mul__ = __rmul__

    def __matmul__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- action on the polynomial space --------------------------------------

    def apply(self, x: UElement) -> UElement:
        """Apply the operator to an element of the polynomial space."""
        out = {}
        for mono, mc in x.terms.items():
            for (mul, der), oc in self.terms.items():
                factor = 1
                for v in range(4):
                    k = der[v]
                    if k:
                        factor *= math.perm(mono[v], k)
                        if not factor:
                            break
                if not factor:
                    continue
                new = (
                    mono[0] - der[0] + mul[0],
                    mono[1] - der[1] + mul[1],
                    mono[2] - der[2] + mul[2],
                    mono[3] - der[3] + mul[3],
                    mono[4] + mul[4],
                )
                s = out.get(new, 0) + oc * mc * factor
                if s:
                    out[new] = s
                elif new in out:
                    del out[new]
        return UElement._make(out)

    def __str__(self):
        if not self.terms:
            return "0"
        def word_key(item):
            (mul, der), _ = item
            return (sum(mul) + sum(der), mul, der)
        chunks = []
        for n, ((mul, der), coeff) in enumerate(
            sorted(self.terms.items(), key=word_key, reverse=True)
        ):
            coeff = Fraction(coeff)
            neg = coeff < 0
            mag = -coeff if neg else coeff
            parts = [
                f"M_{ch}" if e == 1 else f"M_{ch}^{e}"
                for ch, e in zip(LETTERS, mul)
                if e
            ] + [
                f"D_{ch}" if e == 1 else f"D_{ch}^{e}"
                for ch, e in zip(DERIV_LETTERS, der)
                if e
            ]
            word = " ".join(parts) if parts else "1"
            if mag == 1 and parts:
                body = word
            elif parts:
                body = f"{mag} {word}"
            else:
                body = str(mag)
            if n == 0:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f" - {body}" if neg else f" + {body}")
        return "".join(chunks)

    def __repr__(self):
        return f"Operator({self.terms!r})"


def compose(f: Operator, g: Operator) -> Operator:
    """Normal-ordered product ``f g`` (``g`` acts first).

    Straightening moves every derivation of ``f`` past the multiplications
    of ``g``.  Letter by letter, ``D^m M^n = sum_i i! C(m,i) C(n,i)
    M^(n-i) D^(m-i)``, and distinct letters commute, so the product of two
    words expands over one contraction index per colliding letter.
    """
    out = {}
    for (m1, d1), c1 in f.terms.items():
        for (m2, d2), c2 in g.terms.items():
            base = c1 * c2
            options = []
            for v in range(4):
                m, n = d1[v], m2[v]
                top = min(m, n)
                if top:
                    options.append(
                        [
                            (v, i, math.factorial(i) * math.comb(m, i) * math.comb(n, i))
                            for i in range(top + 1)
                        ]
                    )
            if not options:
                word = (
                    tuple(m1[t] + m2[t] for t in range(5)),
                    tuple(d1[t] + d2[t] for t in range(4)),
                )
                s = out.get(word, 0) + base
                if s:
                    out[word] = s
                elif word in out:
                    del out[word]
                continue
            for combo in _iterproduct(*options):
                drop = [0, 0, 0, 0]
                weight = 1
                for v, i, w in combo:
                    drop[v] = i
                    weight *= w
                word = (
                    (
                        m1[0] + m2[0] - drop[0],
                        m1[1] + m2[1] - drop[1],
                        m1[2] + m2[2] - drop[2],
                        m1[3] + m2[3] - drop[3],
                        m1[4] + m2[4],
                    ),
                    tuple(d1[t] + d2[t] - drop[t] for t in range(4)),
                )
                s = out.get(word, 0) + base * weight
                if s:
                    out[word] = s
                elif word in out:
                    del out[word]
    return Operator._make(out)


# ---------------------------------------------------------------------------
# the generator tables
# ---------------------------------------------------------------------------

_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)

_M = {ch: tuple(1 if t == i else 0 for t in range(5)) for i, ch in enumerate(LETTERS)}
_D = {ch: tuple(1 if t == i else 0 for t in range(4)) for i, ch in enumerate(DERIV_LETTERS)}
_D0 = (0, 0, 0, 0)
_Dab = (1, 1, 0, 0)
_Dad = (1, 0, 0, 1)
_Dbd = (0, 1, 0, 1)

_RHO_TABLE = {
    # right multiplication by each generator
    "a": {(_M["c"], _D["b"]): -1, (_M["e"], _Dbd): _HALF},
    "b": {(_M["c"], _D["a"]): 1, (_M["e"], _Dad): -_HALF},
    "c": {(_M["e"], _D["d"]): -1},
    "d": {(_M["e"], _D["c"]): 1, (_M["e"], _Dab): _HALF},
    "e": {},
}

_LMUL_TABLE = {
    # left multiplication by each generator
    "a": {(_M["a"], _D0): 1},
    "b": {(_M["b"], _D0): 1, (_M["c"], _D["a"]): -1, (_M["e"], _Dad): _THIRD},
    "c": {(_M["c"], _D0): 1},
    "d": {(_M["d"], _D0): 1, (_M["e"], _D["c"]): -1, (_M["e"], _Dab): -_THIRD},
    "e": {(_M["e"], _D0): 1},
}

_RHO = {ch: Operator._make(dict(t)) for ch, t in _RHO_TABLE.items()}
_LMUL = {ch: Operator._make(dict(t)) for ch, t in _LMUL_TABLE.items()}


def rho(letter: str) -> Operator:
    """Right multiplication by a generator, as a normal-ordered operator."""
    try:
        return _RHO[letter]
    except KeyError:
        raise ValueError(f"unknown generator {letter!r}") from None


def lmul(letter: str) -> Operator:
    """Left multiplication by a generator, as a normal-ordered operator."""
    try:
        return _LMUL[letter]
    except KeyError:
        raise ValueError(f"unknown generator {letter!r}") from None


# ---------------------------------------------------------------------------
# left multiplication by a whole monomial
# ---------------------------------------------------------------------------

def standard_word(s, t, u, v, w, x, y, z) -> Operator:
    """The composed word ``L(a)^s D_a^t L(b)^u D_b^v L(c)^w D_d^x L(d)^y L(e)^z``.

    Rightmost factor acts first, as usual for operator products.
    """
    key = (s, t, u, v, w, x, y, z)
    cached = _WORD_MEMO.get(key)
    if cached is not None:
        return cached
    factors = (
        (_LMUL["a"], s),
        (Operator.deriv("a"), t),
        (_LMUL["b"], u),
        (Operator.deriv("b"), v),
        (_LMUL["c"], w),
        (Operator.deriv("d"), x),
        (_LMUL["d"], y),
        (_LMUL["e"], z),
    )
    acc = Operator.identity()
    for op, count in factors:
        for _ in range(count):
            acc = compose(acc, op)
    _WORD_MEMO[key] = acc
    return acc


_WORD_MEMO: dict = {}


def lb_power_closed(u: int) -> Operator:
    """Closed trinomial expansion of ``L(b)^u``."""
    terms = {}
    for eps in range(u + 1):
        for zeta in range(u - eps + 1):
            coeff = Fraction(
                (-1) ** zeta * multinomial(u, (eps, zeta)), 3 ** (u - eps - zeta)
            )
            word = ((0, eps, zeta, 0, u - eps - zeta), (u - eps, 0, 0, u - eps - zeta))
            terms[word] = terms.get(word, 0) + coeff
    return Operator._make({w: c for w, c in terms.items() if c})


def ld_power_closed(y: int) -> Operator:
    """Closed trinomial expansion of ``L(d)^y``."""
    terms = {}
    for eta in range(y + 1):
        for theta in range(y - eta + 1):
            coeff = Fraction(
                (-1) ** (y - eta) * multinomial(y, (eta, theta)), 3 ** (y - eta - theta)
            )
            word = ((0, 0, 0, eta, y - eta), (y - eta - theta, y - eta - theta, theta, 0))
            terms[word] = terms.get(word, 0) + coeff
    return Operator._make({w: c for w, c in terms.items() if c})


def l_of_monomial(mono) -> Operator:
    """Left multiplication by the basis monomial ``mono``, in closed form.

    This is the nine-index expansion of the composed standard words; it is
    the operator kernel behind the closed structure constants.  Loop bounds
    are pruned to exactly the index tuples with nonzero combinatorial
    weight, so every surviving summand contributes.
    """
    cached = _L_MEMO.get(mono)
    if cached is not None:
        return cached
    i, j, k, l, m = mono
    fact = math.factorial
    out = {}
    for alpha in range(l + 1):
        f_alpha = fact(alpha)
        for beta in range(i + 1):
            bin_i = binomial(i, beta)
            for gamma in range(max(0, beta - alpha), beta + 1):
                bin_ag = binomial(alpha, beta - gamma)
                pow2 = 2 ** (alpha + gamma)
                d_lo = max(0, alpha + gamma - l)
                d_hi = min(gamma, j - alpha)
                for delta in range(d_lo, d_hi + 1):
                    u_cap = j - alpha - delta
                    y_cap = l - alpha - gamma + delta
                    for eps in range(u_cap + 1):
                        for zeta in range(u_cap - eps + 1):
                            mj = multinomial(j, (alpha, delta, eps, zeta))
                            rem_j = j - alpha - eps - zeta  # >= delta >= 0
                            for eta in range(y_cap + 1):
                                for theta in range(y_cap - eta + 1):
                                    ml = multinomial(l, (alpha, gamma - delta, eta, theta))
                                    e3 = (j - eps - zeta) + (l - alpha - eta - theta)
                                    sign = -1 if (beta + zeta + l - alpha - gamma - eta) & 1 else 1
                                    den = pow2 * 3 ** e3
                                    base = sign * f_alpha * fact(beta) * bin_ag * bin_i * mj * ml
                                    for lam in range(min(eta, rem_j) + 1):
                                        num = (
                                            base
                                            * fact(lam)
                                            * binomial(rem_j, lam)
                                            * binomial(eta, lam)
                                        )
                                        word = (
                                            (
                                                i - beta,
                                                eps,
                                                zeta + k,
                                                eta - lam,
                                                rem_j + l - eta + m,
                                            ),
                                            (
                                                j - beta - eps + l - alpha - eta - theta,
                                                l - alpha - eta - theta,
                                                theta,
                                                rem_j - lam,
                                            ),
                                        )
                                        s = out.get(word, 0) + Fraction(num, den)
                                        if s:
                                            out[word] = s
                                        elif word in out:
                                            del out[word]
    op = Operator._make(out)
    _L_MEMO[mono] = op
    return op


_L_MEMO: dict = {}


def l_of_monomial_via_factors(mono) -> Operator:
    """Left multiplication by ``mono`` built the slow way.

    Expands the monomial into a four-index combination of standard words and
    composes each word from the primitive generator operators.  Summation
    limits are written plainly; the vanishing conventions of
    :func:`~malcev5.core.multinomial` and :func:`~malcev5.core.binomial`
    silently kill the out-of-range terms.  Serves as an independent oracle
    for :func:`l_of_monomial`.
    """
    i, j, k, l, m = mono
    fact = math.factorial
    acc = Operator.zero()
    for alpha in range(l + 1):
        for beta in range(i + 1):
            for gamma in range(beta + 1):
                for delta in range(gamma + 1):
                    weight = (
                        binomial(alpha, beta - gamma)
                        * binomial(i, beta)
                        * multinomial(j, (alpha, delta))
                        * multinomial(l, (alpha, gamma - delta))
                    )
                    if not weight:
                        continue
                    coeff = Fraction(
                        (-1) ** (beta + delta) * fact(alpha) * fact(beta) * weight,
                        6 ** (alpha + gamma),
                    )
                    word = standard_word(
                        i - beta,
                        alpha - beta + gamma,
                        j - alpha - delta,
                        gamma - delta,
                        k,
                        delta,
                        l - alpha - gamma + delta,
                        m + alpha + gamma,
                    )
                    acc = acc + coeff * word
    return acc
