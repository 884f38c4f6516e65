import random
from itertools import combinations
from fractions import Fraction

import pytest
import sympy

from schubert_bcd.polynomial import Polynomial
from schubert_bcd.quotient import (
    NotStable,
    adjoint_element,
    expand_product_basis,
    is_n_stable,
    is_n_stable_direct,
    matrix_rank,
    product_basis_element,
    reduce_by_linear_algebra,
    reduce_to_schubert_basis,
    scalar_product,
    solve_exact,
    structure_constants,
)
from schubert_bcd.schubert import single_schubert
from schubert_bcd.weyl import SignedPermutation, WeylGroup

P = Polynomial.parse
W = SignedPermutation


def to_sympy(f: Polynomial, xs):
    out = sympy.Integer(0)
    for e, c in f.terms.items():
        assert not any(e[f.n:])
        c = Fraction(c)
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(xs, e):
            term *= s**k
        out += term
    return out


def invariant_ideal(n):
    """Groebner basis of the ideal of positive-degree W_n invariants: e_k(x_1^2, ..., x_n^2)."""
    xs = sympy.symbols(f"x1:{n + 1}")
    sq = [x**2 for x in xs]
    gens = []
    for k in range(1, n + 1):
        gens.append(sum(sympy.prod(c) for c in combinations(sq, k)))
    return xs, sympy.groebner(gens, *xs, order="grevlex")


@pytest.mark.parametrize("n,pairs", [(2, None), (3, 25)])
def test_structure_constants_against_groebner_reduction(n, pairs):
    xs, G = invariant_ideal(n)
    E = WeylGroup("C", n).elements()
    todo = [(u, v) for u in E for v in E]
    if pairs:
        todo = random.Random(1).sample(todo, pairs)
    for u, v in todo:
        consts = structure_constants("C", u, v, n)
        lhs = single_schubert("C", n, u) * single_schubert("C", n, v)
        rhs = Polynomial.zero(n)
        for w, c in consts.items():
            rhs = rhs + single_schubert("C", n, w).scale(c)
        _, rem = G.reduce(sympy.expand(to_sympy(lhs - rhs, xs)))
        assert rem == 0, (u, v)
        assert all(isinstance(c, int) and c > 0 for c in consts.values())


def test_structure_examples():
    s0 = W((-1, 2))
    assert structure_constants("C", s0, s0, 2) == {W((-2, 1)): 2}
    s1 = W((2, 1, 3))
    assert structure_constants("A", s1, s1, 3) == {W((3, 1, 2)): 1}
    assert structure_constants("A", W((1, 2, 3)), W((1, 3, 2)), 3) == {W((1, 3, 2)): 1}
    with pytest.raises(NotStable):
        structure_constants("A", W((2, 1)), W((2, 1)), 2)
    with pytest.raises(ValueError):
        structure_constants("B", s0, s0, 2)


def test_reduction_methods_agree():
    for f in ("(x1+x2)^2", "x1^3*x2 + 5*x2^4", "x1^2 + x2^2", "7"):
        g = P(f, 2)
        assert reduce_to_schubert_basis(g) == reduce_by_linear_algebra(g)
    assert reduce_to_schubert_basis(P("(x1+x2)^2", 2)) == {W((-2, 1)): 2}
    assert reduce_to_schubert_basis(P("x1^2 + x2^2", 2)) == {}


def test_scalar_product_small():
    assert scalar_product(P("1", 1), P("1", 1)) == P("0", 1)
    assert scalar_product(P("x1", 1), P("1", 1)) == P("1", 1)


def test_product_basis_expansion():
    n = 2
    s1 = W((2, 1))
    f = product_basis_element(s1, (1,), n)
    assert expand_product_basis(f) == {(s1, (1,)): 1}
    assert expand_product_basis(P("1", n)) == {(W((1, 2)), ()): 1}
    assert scalar_product(f, adjoint_element(s1, (1,), n)) == P("1", n)
    assert scalar_product(f, adjoint_element(W((1, 2)), (1,), n)) == P("0", n)


def test_stability_predicate():
    s1 = W((2, 1))
    assert not is_n_stable(s1, s1, 2)
    assert is_n_stable(s1, s1, 3)
    for u in WeylGroup("A", 3).elements():
        assert is_n_stable(W((1, 2, 3)), u, 3)
        for v in WeylGroup("A", 3).elements():
            assert is_n_stable(u, v, 4) == is_n_stable_direct(u, v, 4)


def test_linear_algebra_helpers():
    assert solve_exact([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0], [0, 1], [1, 1]]) == 2
