import json

from hypothesis import given, strategies as st

from schubert_bcd.loci import (
    ChowElement,
    chern_notation,
    chern_series,
    kempf_laksov,
    lagrangian_class,
    lq1_record,
    lq1_report,
    single_row_class,
    staircase_minus_part,
    staircase_minus_part_class,
    symmetric_reduce,
)
from schubert_bcd.polynomial import Polynomial, X, Y, elementary
from schubert_bcd.schubert import keylemma_sides

P = Polynomial.parse
h, z, p = (ChowElement.gen(s) for s in "hzp")

chow = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 6), st.integers(0, 2)), st.integers(-3, 3), max_size=5
).map(ChowElement.from_dict)


def test_chow_relations():
    assert z * z * z * z == -2 * h * h * z * z
    assert str(z**2 * z**2) == "-2h2z2"
    assert (z**6).is_zero()
    assert (h * p * p).is_zero()
    assert (h**4).is_zero()
    assert str((2 * h + z + p) * (h * h + h * z + h * p)) == "2h3 + 3h2z + 3h2p + hz2 + 2hzp"


@given(chow, chow, chow)
def test_chow_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert ChowElement.from_dict(a.as_dict()) == a


def test_lq1_report():
    r = lq1_report()
    assert str(r["difference"]) == "2h3 + 2h2z + 2h2p + hz2 + 2hzp"
    assert not r["equal"] and not r["locus_in_chern_span"]
    rec = lq1_record()
    assert json.loads(json.dumps(rec)) == rec
    assert rec["locus"] == "h2z + h2p" and rec["equal"] is False


def test_kempf_laksov_small_cases():
    n = 3
    cq = chern_series(X(n), n)
    cv = chern_series(Y(2), n)
    assert kempf_laksov((), cq, []) == 1
    assert kempf_laksov((1,), cq, [cv]) == elementary(1, X(n), n) - elementary(1, Y(2), n)
    c = [kempf_laksov((k,), cq, [cv]) for k in range(3)]
    two = kempf_laksov((1, 1), cq, [cv, cv])
    assert two == c[1] * c[1] - c[2] * c[0]


def test_single_row_and_staircase_minus_part():
    assert single_row_class(1, 2) == P("x1 + x2 + y1 + y2", 2)
    assert single_row_class(2, 2) == P("y1^2 + (x1+x2)*y1 + x1*x2", 2)
    assert staircase_minus_part(3, 2) == (3, 1)
    for k in (1, 2, 3):
        for j in range(1, k + 1):
            lam = staircase_minus_part(k, j)
            assert staircase_minus_part_class(k, j, 3) == lagrangian_class("C", lam, 3)
    assert lagrangian_class("C", (), 2) == P("1", 2)


def test_keylemma_examples():
    for n in (2, 3, 4):
        lhs, rhs = keylemma_sides((1,), n)
        assert lhs == rhs == elementary(1, Y(n - 1), n)
    lhs, rhs = keylemma_sides((), 3)
    assert lhs == rhs == P("0", 3)
    lhs, rhs = keylemma_sides((2, 1), 3)
    assert lhs == rhs


def test_chern_notation():
    f = lagrangian_class("C", (2,), 2)
    assert chern_notation(f) == "c1(E*)*c1(F1*) + c2(E*) + c1(F1*)^2"
    assert chern_notation(P("x1 + x2 + y1 + y2", 2)) == "c1(E*) + c1(F2*)"
    assert chern_notation(P("0", 2)) == "0"
    red = symmetric_reduce(P("x1^2 + x2^2", 2), X(2))
    assert red == {(2, 0): P("1", 2), (0, 1): P("-2", 2)}
