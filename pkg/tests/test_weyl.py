from collections import deque
from math import factorial

import pytest
from hypothesis import given, strategies as st

from schubert_bcd.partitions import d_dual, dual, is_strict, staircase, strict_partitions
from schubert_bcd.weyl import (
    SignedPermutation,
    WeylGroup,
    embed_b,
    embed_c,
    embed_d,
    l_set,
    left_to_right_minima,
    max_grassmannian,
    parse_element,
)

W = SignedPermutation
GROUPS = [("A", 1), ("A", 3), ("A", 4), ("B", 2), ("C", 1), ("C", 3), ("D", 2), ("D", 3), ("D", 4)]


def bfs_lengths(G: WeylGroup) -> dict:
    """Word length in the Cayley graph, the oracle for G.length."""
    start = G.identity()
    dist = {start: 0}
    queue = deque([start])
    gens = [G.generator(g) for g in G.generators()]
    while queue:
        w = queue.popleft()
        for s in gens:
            v = w * s
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


@pytest.mark.parametrize("family,n", GROUPS)
def test_length_matches_cayley_graph(family, n):
    G = WeylGroup(family, n)
    dist = bfs_lengths(G)
    assert set(dist) == set(G.elements())
    assert all(G.length(w) == d for w, d in dist.items())


@pytest.mark.parametrize("family,n", GROUPS)
def test_group_order_and_longest(family, n):
    G = WeylGroup(family, n)
    order = {"A": factorial(n), "B": 2**n * factorial(n), "C": 2**n * factorial(n)}.get(
        family, 2 ** (n - 1) * factorial(n)
    )
    assert len(G.elements()) == order
    top = {"A": n * (n - 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[family]
    assert G.length(G.longest()) == top == G.max_length()


@pytest.mark.parametrize("family,n", [("C", 2), ("C", 3), ("D", 3), ("A", 4)])
def test_reduced_words_recompose(family, n):
    G = WeylGroup(family, n)
    for w in G.elements():
        words = G.reduced_words(w)
        assert G.reduced_word(w) in words
        for word in words:
            assert len(word) == G.length(w)
            assert G.from_word(word) == w
            assert G.is_reduced(word)


def test_reduced_word_counts():
    assert len(WeylGroup("A", 4).reduced_words(WeylGroup("A", 4).longest())) == 16
    assert len(WeylGroup("C", 2).reduced_words(W((-1, -2)))) == 2
    assert WeylGroup("C", 2).reduced_word(W((-1, -2))) == [1, 0, 1, 0]


def test_generators_act_on_positions():
    G = WeylGroup("D", 3)
    assert G.generator("box") == W((-2, -1, 3))
    assert WeylGroup("C", 3).generator(0) == W((-1, 2, 3))
    assert G.generator(2) == W((1, 3, 2))
    assert G.longest() == W((1, -2, -3))
    assert WeylGroup("D", 2).longest() == W((-1, -2))


perms = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.permutations(range(1, n + 1)), st.lists(st.booleans(), min_size=n, max_size=n))
).map(lambda t: W(tuple(-v if neg else v for v, neg in zip(*t))))


@given(perms, st.data())
def test_composition_is_a_group_law(u, data):
    n = u.n
    v = data.draw(perms.filter(lambda p: p.n == n))
    w = data.draw(perms.filter(lambda p: p.n == n))
    assert (u * v) * w == u * (v * w)
    assert u * u.inverse() == W.identity(n)
    for i in range(1, n + 1):
        assert (u * v)(i) == (1 if v(i) > 0 else -1) * u(abs(v(i)))


@given(perms)
def test_length_of_inverse(w):
    G = WeylGroup("C", w.n)
    assert G.length(w) == G.length(w.inverse())
    assert G.weak_leq(G.identity(), w)


def test_embeddings():
    assert embed_c(W((-1, -2))) == W((4, 3, 2, 1))
    assert embed_b(W((-1,))) == W((3, 2, 1))
    for w in WeylGroup("C", 2).elements():
        A = WeylGroup("A", 4)
        assert A.length(embed_c(w)) >= WeylGroup("C", 2).length(w)
    assert all(embed_d(w).is_unsigned() for w in WeylGroup("D", 3).elements())


def test_parse_element():
    assert parse_element("2,-1", "C", 2) == W((2, -1))
    assert parse_element("[-2, 1]", "C", 2) == W((-2, 1))
    assert parse_element("box", "D", 2) == W((-2, -1))
    assert parse_element("s0", "B", 2) == W((-1, 2))
    assert parse_element("w0", "A", 3) == W((3, 2, 1))
    assert parse_element("id", "D", 3) == W((1, 2, 3))
    for text, fam in [("2,-1", "D"), ("box", "C"), ("s0", "D"), ("1,1", "C"), ("junk", "C"), ("-1,2", "A")]:
        with pytest.raises(ValueError):
            parse_element(text, fam, 2)


def test_signed_permutation_validation():
    for bad in [(1, 1), (0, 1), (3, 1), (2, -2)]:
        with pytest.raises(ValueError):
            W(bad)
    assert str(W((-2, 1))) == "[-2,1]"
    assert W((-2, 1, 3)).restrict(2) == W((-2, 1))
    assert W((2, 1)).shift() == W((1, 3, 2))


def test_max_grassmannian_elements():
    assert max_grassmannian("C", (2,), 2) == W((-2, 1))
    assert max_grassmannian("C", (2, 1), 2) == W((-2, -1))
    assert max_grassmannian("C", (), 2) == W((1, 2))
    for n in (2, 3):
        C = WeylGroup("C", n)
        for lam in strict_partitions(n):
            assert C.length(max_grassmannian("C", lam, n)) == sum(lam)
        D = WeylGroup("D", n)
        for lam in strict_partitions(n - 1):
            w = max_grassmannian("D", lam, n)
            assert D.contains(w) and D.length(w) == sum(lam)


def test_l_set_size():
    for n in (2, 3):
        for w in WeylGroup("A", n).elements():
            assert len(l_set(w)) == 2 ** left_to_right_minima(w)


def test_partitions():
    assert strict_partitions(2) == ((), (1,), (2,), (2, 1))
    assert len(strict_partitions(4)) == 16
    assert staircase(3) == (3, 2, 1)
    assert dual((2,), 3) == (3, 1)
    assert dual((), 2) == (2, 1)
    assert is_strict((3, 1)) and not is_strict((2, 2))
    assert all(dual(dual(lam, 4), 4) == lam for lam in strict_partitions(4))
    assert len(d_dual((1,), 3)) == 2
