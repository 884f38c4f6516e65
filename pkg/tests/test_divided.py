import random

import pytest

from schubert_bcd.divided import apply_element, apply_generator, apply_word, naive_generator
from schubert_bcd.kernels import delta, full_kernel
from schubert_bcd.polynomial import Polynomial
from schubert_bcd.verify import check_operator_relations, check_word_independence, random_poly
from schubert_bcd.weyl import SignedPermutation, WeylGroup

P = Polynomial.parse


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("C", 3), ("D", 3), ("D", 2)])
def test_closed_form_matches_literal_division(family, n):
    rng = random.Random(7)
    W = WeylGroup(family, n)
    for _ in range(15):
        f = random_poly(rng, n)
        for g in W.generators():
            assert apply_generator(f, g, family) == naive_generator(f, g, family), g


def test_small_values():
    assert apply_generator(P("x1", 2), 1, "C") == P("1", 2)
    assert apply_generator(P("x1", 2), 0, "C") == P("1", 2)
    assert apply_generator(P("x1", 2), 0, "B") == P("2", 2)
    assert apply_generator(P("x1", 2), "box", "D") == P("1", 2)
    assert apply_generator(P("x1", 2), 1, "C", primed=True) == P("-1", 2)
    assert apply_generator(P("x1", 2), 0, "C", primed=True) == P("1", 2)


def test_generators_outside_the_family():
    f = P("x1", 2)
    with pytest.raises(ValueError):
        apply_generator(f, "box", "C")
    with pytest.raises(ValueError):
        apply_generator(f, 0, "D")
    with pytest.raises(ValueError):
        apply_generator(f, 2, "C")


def test_identity_and_longest_elements():
    f = P("x1^2*y1 + x2", 2)
    assert apply_element(f, SignedPermutation((1, 2)), "C") == f
    A = WeylGroup("A", 3)
    assert apply_element(delta(3), A.longest(), "A") == P("1", 3)
    C = WeylGroup("C", 2)
    assert apply_element(full_kernel("C", 2), C.longest(), "C", primed=True) * (-1) == P("1", 2)


def test_word_order_is_rightmost_first():
    f = P("x1^3*x2", 2)
    assert apply_word(f, [0, 1], "C") == apply_generator(apply_generator(f, 1, "C"), 0, "C")


def test_unprimed_type_d_depends_on_the_word():
    # d_box d_2 d_box and d_2 d_box d_2 disagree by a sign on x2*x3^2
    f = P("x2*x3^2", 3)
    a = apply_word(f, ["box", 2, "box"], "D")
    b = apply_word(f, [2, "box", 2], "D")
    assert a == -b and not a.is_zero()
    assert apply_word(f, ["box", 2, "box"], "D", True) == apply_word(f, [2, "box", 2], "D", True)
    with pytest.raises(ValueError):
        apply_element(f, WeylGroup("D", 3).longest(), "D")


@pytest.mark.parametrize(
    "family,n,primed",
    [("A", 3, False), ("B", 3, False), ("C", 3, False), ("C", 3, True), ("D", 3, True), ("D", 4, True)],
)
def test_relations(family, n, primed):
    assert check_operator_relations(family, n, 20, primed, seed=3)
    assert check_word_independence(family, n, 5, primed, seed=3)


def test_pure_backend_end_to_end():
    import os
    import subprocess
    import sys

    env = dict(os.environ, SCHUBERT_BCD_PURE="1")
    code = (
        "import schubert_bcd as s; from schubert_bcd.verify import run_suite;"
        "assert s.BACKEND == 'python';"
        "assert all(r.ok for r in run_suite('examples-n3') + run_suite('operators'))"
    )
    subprocess.run([sys.executable, "-c", code], env=env, check=True)
