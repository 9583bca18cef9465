"""Products, brackets, and associators of the enveloping algebra.

Two independent multiplication routes live here and must agree everywhere:

* :func:`mul_u_closed` -- the closed structure-constant kernel, a nine-index
  integer sum obtained by letting the closed left-multiplication operator of
  :mod:`malcev5.diffops` act on a basis monomial;
* :func:`mul_u_oracle` -- a recursive evaluator that knows nothing about
  operators or closed sums.  It reduces every product to the degree-lowering
  identities forced by the defining brackets: a bracket recursion that peels
  the smallest letter off the left factor of ``[x, f]``, a left-multiplication
  recursion for ``f * x`` with a single generator on the left, and a
  generator-peeling identity for general products.

The recursion is the ground truth the closed form is tested against; the
closed form (memoized) is what everything else uses.  ``check oracle``
compares the two, together with the operator route, over a full degree range.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

from .core import (
    ONE,
    ComputationError,
    MalcevVector,
    Monomial,
    UElement,
    binomial,
    letter_monomial,
    multinomial,
)

# ---------------------------------------------------------------------------
# memo tables
# ---------------------------------------------------------------------------

# Entries per memo table; 0 (the default) means unbounded.  A table that
# reaches the cap is simply cleared and refilled -- results never change,
# only how much gets remembered.
_MEMO_LIMIT = int(os.environ.get("MALCEV5_MEMO_LIMIT", "0")) or None


def _memo_put(table: dict, key, value):
    if _MEMO_LIMIT is not None and len(table) >= _MEMO_LIMIT:
        table.clear()
    table[key] = value
    return value


_CLOSED_MEMO: dict = {}
_LMUL_MEMO: dict = {}
_BRACKET_MEMO: dict = {}
_MUL_MEMO: dict = {}


def clear_memos() -> None:
    """Drop all memoized products (mainly useful for measuring cold runs)."""
    _CLOSED_MEMO.clear()
    _LMUL_MEMO.clear()
    _BRACKET_MEMO.clear()
    _MUL_MEMO.clear()


# ---------------------------------------------------------------------------
# closed-form route
# ---------------------------------------------------------------------------

def mul_u_closed(x: Monomial, y: Monomial) -> UElement:
    """Product of two basis monomials from the universal structure constants.

    The inner loops run over exactly the index tuples whose combinatorial
    weight is nonzero (all bounds are pruned, including through the falling
    factorials applied to the right factor), and accumulate integer
    numerators over the common denominator ``2^(l+i) 3^(j+l)``; the result
    is reduced once per output monomial.
    """
    cached = _CLOSED_MEMO.get((x, y))
    if cached is not None:
        return cached
    if x == ONE:
        return _memo_put(_CLOSED_MEMO, (x, y), UElement._make({y: 1}))
    if y == ONE:
        return _memo_put(_CLOSED_MEMO, (x, y), UElement._make({x: 1}))

    i, j, k, l, m = x
    p, q, r, s, t = y
    fact = math.factorial
    perm = math.perm
    pow3_all = 3 ** (j + l)
    K = (2 ** (l + i)) * pow3_all
    acc: dict = {}

    for alpha in range(l + 1):
        f_alpha = fact(alpha)
        for beta in range(i + 1):
            base_b = f_alpha * fact(beta) * binomial(i, beta)
            ma = i - beta  # M_a exponent of the word
            for gamma in range(max(0, beta - alpha), beta + 1):
                base_g = base_b * binomial(alpha, beta - gamma)
                k2 = 2 ** (l + i - alpha - gamma)  # K / 2^(alpha+gamma)
                for delta in range(max(0, alpha + gamma - l), min(gamma, j - alpha) + 1):
                    u_cap = j - alpha - delta
                    y_cap = l - alpha - gamma + delta
                    for eps in range(u_cap + 1):
                        for zeta in range(u_cap - eps + 1):
                            mj = multinomial(j, (alpha, delta, eps, zeta))
                            rem_j = j - alpha - eps - zeta
                            base_z = base_g * mj
                            e_base = rem_j + l + m + t  # e-exp before -eta
                            for eta in range(y_cap + 1):
                                th_lo = max(
                                    0,
                                    l - alpha - eta - q,
                                    j - beta - eps + l - alpha - eta - p,
                                )
                                th_hi = min(y_cap - eta, r)
                                if th_lo > th_hi:
                                    continue
                                lam_lo = max(0, rem_j - s)
                                lam_hi = min(eta, rem_j)
                                if lam_lo > lam_hi:
                                    continue
                                # the output monomial does not depend on the
                                # contraction index, so its sum collapses here
                                lam_sum = sum(
                                    fact(lam)
                                    * binomial(rem_j, lam)
                                    * binomial(eta, lam)
                                    * perm(s, rem_j - lam)
                                    for lam in range(lam_lo, lam_hi + 1)
                                )
                                sign = -1 if (beta + zeta + l - alpha - gamma - eta) & 1 else 1
                                ed = s - rem_j + eta
                                em = e_base - eta
                                for theta in range(th_lo, th_hi + 1):
                                    da = j - beta - eps + l - alpha - eta - theta
                                    db = l - alpha - eta - theta
                                    ff = perm(p, da) * perm(q, db) * perm(r, theta)
                                    if not ff:
                                        continue
                                    ml = multinomial(l, (alpha, gamma - delta, eta, theta))
                                    e3 = (j - eps - zeta) + db
                                    # K / (2^(alpha+gamma) 3^e3), an exact integer
                                    scale = k2 * 3 ** (j + l - e3)
                                    num = sign * base_z * ml * ff * lam_sum * scale
                                    mono = (p - da + ma, q - db + eps, r - theta + zeta + k, ed, em)
                                    acc[mono] = acc.get(mono, 0) + num
    out = UElement._make(
        {mono: Fraction(num, K) for mono, num in acc.items() if num}
    )
    return _memo_put(_CLOSED_MEMO, (x, y), out)


def mul_u(x: UElement, y: UElement) -> UElement:
    """Bilinear product on the enveloping algebra (closed-form kernel)."""
    out: dict = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            c = cx * cy
            for mono, coeff in mul_u_closed(mx, my).terms.items():
                s = out.get(mono, 0) + c * coeff
                if s:
                    out[mono] = s
                elif mono in out:
                    del out[mono]
    return UElement._make(out)


def mul_cde_closed(x: Monomial, y: Monomial) -> UElement:
    """Product of two monomials of the associative subalgebra on c, d, e.

    ``(c^i d^j e^k)(c^l d^m e^n)`` expands over a single contraction index.
    Only defined on monomials with no a or b part (raises otherwise); used
    as a small independent oracle for :func:`mul_u_closed` on that corner.
    """
    if x[0] or x[1] or y[0] or y[1]:
        raise ValueError("mul_cde_closed is only defined on monomials in c, d, e")
    _, _, i, j, k = x
    _, _, l, m, n = y
    out = {}
    for alpha in range(min(j, l) + 1):
        coeff = (-1) ** alpha * math.factorial(alpha) * binomial(j, alpha) * binomial(l, alpha)
        out[(0, 0, i + l - alpha, j + m - alpha, k + n + alpha)] = coeff
    return UElement._make(out)


# ---------------------------------------------------------------------------
# recursive oracle route
# ---------------------------------------------------------------------------

# degree-1 bracket table, by letter index: _B1[(v, w)] = [v, w] as a term dict
_C = (0, 0, 1, 0, 0)
_E = (0, 0, 0, 0, 1)
_B1 = {
    (0, 1): {_C: 1},
    (1, 0): {_C: -1},
    (2, 3): {_E: 1},
    (3, 2): {_E: -1},
}

_LETTER_MONO = tuple(tuple(1 if t == v else 0 for t in range(5)) for v in range(5))


def _leading(mono):
    # index of the smallest letter present; monomials here are never empty
    for v in range(5):
        if mono[v]:
            return v
    raise ValueError("empty monomial has no leading letter")


def _strip(mono, v):
    return mono[:v] + (mono[v] - 1,) + mono[v + 1:]


def _prepended(v, mono):
    return mono[:v] + (mono[v] + 1,) + mono[v + 1:]


def _merge(acc, d, scale):
    if not scale:
        return
    for mono, coeff in d.items():
        s = acc.get(mono, 0) + scale * coeff
        if s:
            acc[mono] = s
        elif mono in acc:
            del acc[mono]


def _bracket_dict(d, f):
    out: dict = {}
    for mono, coeff in d.items():
        _merge(out, _bracket_mono(mono, f), coeff)
    return out


def _lmul_letter(f, x):
    """``f * x`` for a generator index ``f`` and monomial ``x`` (term dict).

    Fast path: when ``f`` does not exceed the smallest letter of ``x`` the
    product is the ordered monomial itself.  Otherwise the degree-lowering
    left-multiplication identity applies; the recursion peels the smallest
    letter ``g`` of ``x`` and every sub-product either shrinks the right
    factor or is an ordered prepend.
    """
    if x == ONE:
        return {_LETTER_MONO[f]: 1}
    g = _leading(x)
    if f <= g:
        return {_prepended(f, x): 1}
    key = (f, x)
    cached = _LMUL_MEMO.get(key)
    if cached is not None:
        return cached
    y = _strip(x, g)
    out: dict = {}
    if y == ONE:
        # f * g with f > g: reorder plus the degree-1 bracket
        out[_prepended(g, _LETTER_MONO[f])] = 1
        _merge(out, _B1.get((f, g), {}), 1)
    else:
        # g (f y)
        for mono, coeff in _lmul_letter(f, y).items():
            _merge(out, _lmul_letter(g, mono), coeff)
        # + [f,g] y
        for w, coeff in _B1.get((f, g), {}).items():
            _merge(out, _lmul_letter(_leading(w), y), coeff)
        byf = _bracket_mono(y, f)
        byg = _bracket_mono(y, g)
        third = Fraction(1, 3)
        # - 1/3 [[y,f],g] + 1/3 [[y,g],f]
        _merge(out, _bracket_dict(byf, g), -third)
        _merge(out, _bracket_dict(byg, f), third)
        # + 1/3 [y,[f,g]]
        for w, coeff in _B1.get((f, g), {}).items():
            _merge(out, _bracket_mono(y, _leading(w)), third * coeff)
    return _memo_put(_LMUL_MEMO, key, out)


def _bracket_mono(x, f):
    """``[x, f]`` for a monomial ``x`` and generator index ``f`` (term dict)."""
    if x == ONE:
        return {}
    g = _leading(x)
    y = _strip(x, g)
    if y == ONE:
        return _B1.get((g, f), {})
    key = (x, f)
    cached = _BRACKET_MEMO.get(key)
    if cached is not None:
        return cached
    out: dict = {}
    # [g,f] y
    for w, coeff in _B1.get((g, f), {}).items():
        _merge(out, _lmul_letter(_leading(w), y), coeff)
    # + g [y,f]
    byf = _bracket_mono(y, f)
    for mono, coeff in byf.items():
        _merge(out, _lmul_letter(g, mono), coeff)
    half = Fraction(1, 2)
    # + 1/2 [[y,f],g] - 1/2 [[y,g],f]
    _merge(out, _bracket_dict(byf, g), half)
    _merge(out, _bracket_dict(_bracket_mono(y, g), f), -half)
    # - 1/2 [y,[f,g]]
    for w, coeff in _B1.get((f, g), {}).items():
        _merge(out, _bracket_mono(y, _leading(w)), -half * coeff)
    return _memo_put(_BRACKET_MEMO, key, out)


def _mul_mono(x, z):
    """``x * z`` for basis monomials, by the generator-peeling recursion."""
    if x == ONE:
        return {z: 1}
    if z == ONE:
        return {x: 1}
    f = _leading(x)
    xt = _strip(x, f)
    if xt == ONE:
        return _lmul_letter(f, z)
    key = (x, z)
    cached = _MUL_MEMO.get(key)
    if cached is not None:
        return cached
    out: dict = {}
    xz = _mul_mono(xt, z)
    for mono, coeff in xz.items():
        # 2 f (xt z)  and  + [xt z, f]
        _merge(out, _lmul_letter(f, mono), 2 * coeff)
        _merge(out, _bracket_mono(mono, f), coeff)
    # - xt (f z)
    for mono, coeff in _lmul_letter(f, z).items():
        _merge(out, _mul_mono(xt, mono), -coeff)
    # - xt [z, f]
    for mono, coeff in _bracket_mono(z, f).items():
        _merge(out, _mul_mono(xt, mono), -coeff)
    return _memo_put(_MUL_MEMO, key, out)


def mul_u_oracle(x: UElement, y: UElement) -> UElement:
    """Bilinear product evaluated purely by the degree-lowering recursions.

    Independent of the closed form and of the operator realization; this is
    the route the others are checked against.
    """
    out: dict = {}
    try:
        for mx, cx in x.terms.items():
            for my, cy in y.terms.items():
                _merge(out, _mul_mono(mx, my), cx * cy)
    except RecursionError as exc:
        raise ComputationError(
            "recursive product evaluation exhausted the recursion limit; "
            "use mul_u (closed form) for inputs this large"
        ) from exc
    return UElement._make(out)


def bracket_u_oracle(x: UElement, letter: str) -> UElement:
    """``[x, v]`` for a generator letter ``v``, by the bracket recursion."""
    from .core import LETTER_INDEX

    f = LETTER_INDEX.get(letter)
    if f is None:
        raise ValueError(f"unknown generator {letter!r}")
    out: dict = {}
    try:
        for mono, coeff in x.terms.items():
            _merge(out, _bracket_mono(mono, f), coeff)
    except RecursionError as exc:
        raise ComputationError("bracket recursion exhausted the recursion limit") from exc
    return UElement._make(out)


# ---------------------------------------------------------------------------
# derived operations
# ---------------------------------------------------------------------------

def bracket_u(x: UElement, y: UElement) -> UElement:
    """Commutator ``xy - yx``."""
    return mul_u(x, y) - mul_u(y, x)


def associator_u(x: UElement, y: UElement, z: UElement) -> UElement:
    """Associator ``(xy)z - x(yz)``."""
    return mul_u(mul_u(x, y), z) - mul_u(x, mul_u(y, z))


def jacobian_u(x: UElement, y: UElement, z: UElement) -> UElement:
    """J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y] on the enveloping algebra."""
    return (
        bracket_u(bracket_u(x, y), z)
        + bracket_u(bracket_u(y, z), x)
        + bracket_u(bracket_u(z, x), y)
    )


def embed(v: MalcevVector) -> UElement:
    """The canonical embedding of the base algebra (degree-1 elements)."""
    return v.u_element()
