"""Divided difference operators acting on the X alphabet.

    d_i f   = (f - s_i f) / (x_i - x_{i+1})       i >= 1
    d_0 f   = (f - s_0 f) / (2 x_1)               type C
    d_0 f   = (f - s_0 f) / x_1                   type B
    d_box f = (f - s_box f) / (x_1 + x_2)         type D

The primed operators differ only by d'_i = -d_i for i >= 1.  For a reduced
word w = s_{a1}...s_{ar}, d_w = d_{a1} o ... o d_{ar}.
"""
from __future__ import annotations

from . import _backend as K
from .polynomial import Polynomial, exact_divide
from .weyl import SignedPermutation, WeylGroup


def _kind(g, family: str) -> tuple[int, int]:
    if g == "box":
        if family != "D":
            raise ValueError("box operator only exists in type D")
        return K.BOX, 0
    if g == 0:
        if family not in ("B", "C"):
            raise ValueError("d_0 only exists in types B and C")
        return (K.ZERO_C if family == "C" else K.ZERO_B), 0
    return K.TRANSPOSITION, g - 1


def apply_generator(f: Polynomial, g, family: str, primed: bool = False) -> Polynomial:
    if isinstance(g, int) and g >= 1 and g >= f.n:
        raise ValueError(f"no operator d_{g} in rank {f.n}")
    kind, pos = _kind(g, family)
    out = Polynomial(K.divdiff(f.terms, kind, pos), f.n, True)
    if primed and kind == K.TRANSPOSITION:
        out = -out
    return out


def apply_word(f: Polynomial, word, family: str, primed: bool = False) -> Polynomial:
    for g in reversed(list(word)):
        f = apply_generator(f, g, family, primed)
        if f.is_zero():
            break
    return f


def apply_element(f: Polynomial, w: SignedPermutation, family: str, primed: bool = False) -> Polynomial:
    """d_w (or d'_w) computed from the greedy reduced word of w.

    In type D only the primed operators satisfy the braid relations (the
    unprimed ones fail the relation between box and d_2 by a sign), so the
    unprimed element-indexed operator is refused there.
    """
    if family == "D" and not primed:
        raise ValueError("unprimed type D operators depend on the reduced word")
    W = WeylGroup(family, f.n)
    return apply_word(f, W.reduced_word(w), family, primed)


def naive_generator(f: Polynomial, g, family: str) -> Polynomial:
    """The same operator computed literally with polynomial division."""
    n = f.n
    W = WeylGroup(family, n)
    num = f - f.act(W.generator(g))
    if g == "box":
        den = Polynomial.x(1, n) + Polynomial.x(2, n)
    elif g == 0:
        den = Polynomial.x(1, n) * (2 if family == "C" else 1)
    else:
        den = Polynomial.x(g, n) - Polynomial.x(g + 1, n)
    return exact_divide(num, den)
