"""Named verification suites used by ``schubert verify``.

A suite is a list of tasks (label, function, args).  Every function is a
module-level callable returning True on success, so suites can be spread
over worker processes.
"""
from __future__ import annotations

import random
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .divided import apply_generator, apply_word
from .kernels import reproducing_kernel
from .loci import (
    chern_series,
    kempf_laksov,
    lagrangian_class,
    lq1_report,
    virtual_series,
    single_row_class,
    staircase_minus_part,
    staircase_minus_part_class,
)
from .partitions import dual, staircase, strict_partitions
from .polynomial import Polynomial, X, Y, leibniz_det
from .quotient import (
    adjoint_element,
    cauchy_sides,
    characterization_report,
    first_degree,
    degree_vector,
    is_n_stable,
    is_n_stable_direct,
    product_basis_element,
    reduce_by_linear_algebra,
    scalar_product,
    stable_structure_constants,
    structure_constants,
)
from .schubert import (
    closed_max_grassmannian,
    double_schubert,
    kernel_vanishing_value,
    keylemma_sides,
    positivity_form,
    restrict_stable,
    single_schubert,
    staircase_element,
    staircase_formula,
    substitute_y_by_x,
    type_a_twist,
    vanishing_value,
)
from .weyl import SignedPermutation, WeylGroup, l_set, left_to_right_minima, max_grassmannian

# Published values of the type C double polynomials in ranks 2 and 3.
TABLE_N2 = {
    (-1, -2): "(y1-x1)*(x1+x2+y1+y2)*(x1*x2+y1*y2)",
    (1, -2): "-x1^2*x2 + (x2^2-y2^2)*y1 + x2*y1^2",
    (-2, -1): "(x1+x2+y1+y2)*(x1*x2+y1*y2)",
    (-2, 1): "x1*x2 + (x1+x2)*y1 + y1^2",
    (2, -1): "x2^2 + x2*(y1+y2) + y1*y2",
    (2, 1): "x2 + y1",
    (-1, 2): "x1 + x2 + y1 + y2",
    (1, 2): "1",
}

TABLE_N3 = {
    (3, 2, 1): "(x2+y1)*(x3+y1)*(x3+y2)",
    (2, 3, 1): "(x3+y1)*(x3+y2)",
    (3, 1, 2): "(x2+y1)*(x3+y1)",
    (2, 1, 3): "x2 + x3 + y1 + y2",
    (1, 3, 2): "x3 + y1",
    (1, 2, 3): "1",
}

STAB_COUNTEREXAMPLE = "x1*x2 + (x1+x2)*(y1+y2) + y1^2 + y1*y2 + y2^2"


@dataclass
class Result:
    label: str
    ok: bool
    detail: str = ""


# examples


def check_table_entry(entries, text) -> bool:
    w = SignedPermutation(tuple(entries))
    return double_schubert("C", w.n, w) == Polynomial.parse(text, w.n)


def simple_reflection_formula(i: int, n: int) -> Polynomial:
    """x_{i+1} + ... + x_n + y_1 + ... + y_{n-i}."""
    out = Polynomial.zero(n)
    for k in range(i + 1, n + 1):
        out = out + Polynomial.x(k, n)
    for k in range(1, n - i + 1):
        out = out + Polynomial.y(k, n)
    return out


def check_simple_reflection(i: int, n: int) -> bool:
    s = WeylGroup("C", n).generator(i)
    return double_schubert("C", n, s) == simple_reflection_formula(i, n)


def check_d_generators(n: int) -> bool:
    D = WeylGroup("D", n)
    half = lambda f: f.scale(Fraction(1, 2))
    sx = sum((Polynomial.x(k, n) for k in range(2, n + 1)), Polynomial.zero(n))
    sy = sum((Polynomial.y(k, n) for k in range(1, n)), Polynomial.zero(n))
    yn = Polynomial.y(n, n)
    sgn = 1 if n % 2 == 0 else -1
    box = half(Polynomial.x(1, n) + sx + sy + yn * sgn)
    s1 = half(-Polynomial.x(1, n) + sx + sy - yn * sgn)
    return double_schubert("D", n, D.generator("box")) == box and double_schubert("D", n, D.generator(1)) == s1


# closed formulas


def check_closed(family: str, lam, n: int, variant: int = 1) -> bool:
    w = max_grassmannian(family, tuple(lam), n)
    return closed_max_grassmannian(family, tuple(lam), n, variant) == double_schubert(family, n, w)


def check_staircase(family: str, k: int, n: int) -> bool:
    return staircase_formula(family, k, n) == double_schubert(family, n, staircase_element(family, k, n))


# type A comparisons


def check_positivity(family: str, entries) -> bool:
    w = SignedPermutation(tuple(entries))
    lhs, rhs = positivity_form(family, w.n, w)
    if lhs != rhs:
        return False
    if family in ("B", "C") and any(c < 0 for c in lhs.terms.values()):
        return False
    if family == "D":
        return len(l_set(w)) == 2 ** left_to_right_minima(w)
    return True


def check_d_fixed_one(entries) -> bool:
    """When w(1) = 1 the type D polynomial itself has the type A form."""
    w = SignedPermutation(tuple(entries))
    star = WeylGroup("A", w.n).star(w)
    return double_schubert("D", w.n, w) == type_a_twist(double_schubert("A", w.n, star))


def check_c_to_a(entries) -> bool:
    """c_w(X,Y) = sum c_u(X) c_v(v0 Y) over u = v w, l(u) + l(v) = l(w)."""
    w = SignedPermutation(tuple(entries))
    n = w.n
    A = WeylGroup("A", n)
    star = A.star(w)
    lw = A.length(w)
    rhs = Polynomial.zero(n)
    for v in A.elements():
        u = v * w
        if A.length(u) + A.length(v) != lw:
            continue
        cy = single_schubert("C", n, v).substitute(
            [(2 * n - 1 - i, 1) for i in range(n)] + [None] * n
        )
        rhs = rhs + single_schubert("C", n, u) * cy
    return double_schubert("C", n, w) == rhs and single_schubert("C", n, w) == single_schubert(
        "A", n, star
    ).substitute([(n - 1 - i, 1) for i in range(n)] + [None] * n)


def check_a_double_to_single(entries) -> bool:
    """S_w(X,Y) = sum S_u(X) S_v(-Y) over u = v w, l(w) = l(u) + l(v)."""
    w = SignedPermutation(tuple(entries))
    n = w.n
    A = WeylGroup("A", n)
    rhs = Polynomial.zero(n)
    for v in A.elements():
        u = v * w
        if A.length(u) + A.length(v) != A.length(w):
            continue
        sv = single_schubert("A", n, v).substitute([(n + i, -1) for i in range(n)] + [None] * n)
        rhs = rhs + single_schubert("A", n, u) * sv
    return double_schubert("A", n, w) == rhs


# scalar products


def check_cauchy(n: int) -> bool:
    lhs, rhs = cauchy_sides(n)
    return lhs == rhs


def check_orth1(u, lam, v, mu, n: int) -> bool:
    u, v = SignedPermutation(tuple(u)), SignedPermutation(tuple(v))
    val = scalar_product(product_basis_element(u, lam, n), adjoint_element(v, tuple(mu), n))
    return val == (1 if (u == v and tuple(lam) == tuple(mu)) else 0)


def check_orth2_all(n: int) -> bool:
    A = WeylGroup("A", n)
    v0 = A.longest()
    top = n * (n - 1) // 2
    for u in A.elements():
        for v in A.elements():
            if A.length(u) + A.length(v) != top:
                continue
            for lam in strict_partitions(n):
                for mu in strict_partitions(n):
                    val = scalar_product(product_basis_element(u, lam, n), product_basis_element(v, mu, n))
                    want = 1 if (v == v0 * u and mu == dual(lam, n)) else 0
                    if val != want:
                        return False
    return True


def orth1_samples(n: int, count: int, seed: int = 0) -> list[tuple]:
    A = WeylGroup("A", n)
    idx = [(w.entries, lam) for w in A.elements() for lam in strict_partitions(n)]
    if count <= 0 or count >= len(idx) ** 2:
        return [(a[0], a[1], b[0], b[1]) for a in idx for b in idx]
    rng = random.Random(seed)
    out = [(a[0], a[1], a[0], a[1]) for a in rng.sample(idx, min(len(idx), count // 2))]
    while len(out) < count:
        a, b = rng.choice(idx), rng.choice(idx)
        out.append((a[0], a[1], b[0], b[1]))
    return out


def check_characterization(n: int) -> bool:
    top = double_schubert("C", n, WeylGroup("C", n).longest())
    return all(characterization_report(top).values())


# vanishing


def check_vanishing(entries) -> bool:
    w = SignedPermutation(tuple(entries))
    n = w.n
    top = double_schubert("C", n, WeylGroup("C", n).longest())
    v0 = WeylGroup("A", n).longest()
    want = vanishing_value(n) if w == v0 else Polynomial.zero(n)
    kern = substitute_y_by_x(reproducing_kernel("C", n), w)
    kwant = kernel_vanishing_value(n) if w.is_unsigned() else Polynomial.zero(n)
    return substitute_y_by_x(top, w) == want and kern == kwant


# stability


def check_c_stability(m: int, nmax: int) -> bool:
    W = WeylGroup("C", m)
    for k in range(1, m + 1):
        top = max_grassmannian("C", staircase(k), m)
        for w in W.elements():
            if not W.weak_leq(w, top):
                continue
            for n in range(m + 1, nmax + 1):
                if restrict_stable("C", w, m, n) != double_schubert("C", m, w):
                    return False
    return True


def check_stability_counterexample() -> bool:
    w = SignedPermutation((-2, 1))
    got = restrict_stable("C", w, 2, 3)
    return got == Polynomial.parse(STAB_COUNTEREXAMPLE, 2) and got != double_schubert("C", 2, w)


def check_a_shift(n: int) -> bool:
    A = WeylGroup("A", n)
    tau = SignedPermutation((n,) + tuple(range(1, n)))
    for w in A.elements():
        if w.entries[0] != 1:
            continue
        lhs = single_schubert("A", n, w).act(tau).specialize(zero=[f"x{n}"])
        if lhs != single_schubert("A", n, tau * w * tau.inverse()):
            return False
    return True


def check_b_single_stability(m: int, n: int) -> bool:
    return all(
        restrict_stable("B", w, m, n, single=True) == single_schubert("B", m, w)
        for w in WeylGroup("B", m).elements()
    )


# structure constants


def check_structure_oracle(u, v, n: int) -> bool:
    u, v = SignedPermutation(tuple(u)), SignedPermutation(tuple(v))
    a = structure_constants("C", u, v, n)
    b = reduce_by_linear_algebra(single_schubert("C", n, u) * single_schubert("C", n, v))
    return a == b and all(isinstance(c, int) and c > 0 for c in a.values())


def check_a_constants_embed(n: int) -> bool:
    """f(u*, v*, w*) = c(u, v, w) on S_n and vanishes off S_n*."""
    A = WeylGroup("A", n)
    W = WeylGroup("C", n)
    for u in A.elements():
        for v in A.elements():
            if not is_n_stable(u, v, n):
                continue
            c = structure_constants("A", u, v, n)
            f = structure_constants("C", W.star(u), W.star(v), n)
            want = {W.star(w): k for w, k in c.items()}
            if f != want:
                return False
    return True


def check_s2_square() -> bool:
    W = WeylGroup("C", 3)
    s2 = W.generator(2)
    return structure_constants("C", s2, s2, 3).get(SignedPermutation((2, 3, 1)), 0) == 1


def check_shift_identity(m: int) -> bool:
    """c(1 x u, 1 x v, 1 x w) = c(u, v, w) for u, v in S_m and every w."""
    A = WeylGroup("A", m)
    for u in A.elements():
        for v in A.elements():
            base = {_trim(w): c for w, c in stable_structure_constants(u, v).items()}
            shifted = {_trim(w): c for w, c in stable_structure_constants(u.shift(), v.shift()).items()}
            for w, c in base.items():
                if shifted.get(_trim(w.shift()), 0) != c:
                    return False
            for w, c in shifted.items():
                if w.entries[0] == 1 and base.get(_trim(_unshift(w)), 0) != c:
                    return False
    return True


def _unshift(w: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(tuple(v - 1 for v in w.entries[1:]) or (1,))


def _trim(w: SignedPermutation) -> SignedPermutation:
    e = list(w.entries)
    while len(e) > 1 and e[-1] == len(e):
        e.pop()
    return SignedPermutation(tuple(e))


def check_stability_shift(n: int) -> bool:
    A = WeylGroup("A", n)
    for u in A.elements():
        for v in A.elements():
            a = is_n_stable(u, v, n)
            if a != is_n_stable_direct(u, v, n) or a != is_n_stable(u.shift(), v.shift(), n + 1):
                return False
    return True


def check_first_degree(n: int) -> bool:
    return all(first_degree(w) == degree_vector(w)[0] for w in WeylGroup("A", n).elements())


# loci


def check_single_row(k: int, n: int) -> bool:
    w = max_grassmannian("C", (k,), n)
    return single_row_class(k, n) == double_schubert("C", n, w) == lagrangian_class("C", (k,), n)


def check_staircase_minus(k: int, j: int, n: int) -> bool:
    lam = staircase_minus_part(k, j)
    w = max_grassmannian("C", lam, n)
    got = staircase_minus_part_class(k, j, n)
    return got == double_schubert("C", n, w) == lagrangian_class("C", lam, n)


def check_keylemma(mu, n: int) -> bool:
    lhs, rhs = keylemma_sides(tuple(mu), n)
    return lhs == rhs


def check_kempf_laksov(lam, ranks, n: int) -> bool:
    cq = chern_series(X(n), n)
    cvs = [chern_series(Y(r), n) for r in ranks]
    a = kempf_laksov(tuple(lam), cq, cvs)
    b = kempf_laksov(tuple(lam), cq, cvs, method="bareiss")
    top = max(lam) + len(lam)
    rows = []
    for i, r in enumerate(ranks):
        c = virtual_series(cq, cvs[i], top)
        rows.append([c[lam[i] + j - i] if 0 <= lam[i] + j - i <= top else 0 for j in range(len(lam))])
    return a == b == leibniz_det(rows)


def check_lq1() -> bool:
    r = lq1_report()
    return (
        str(r["c1"]) == "2h + z + p"
        and str(r["c2"]) == "h2 + hz + hp"
        and str(r["c1c2"]) == "2h3 + 3h2z + 3h2p + hz2 + 2hzp"
        and str(r["locus"]) == "h2z + h2p"
        and str(r["difference"]) == "2h3 + 2h2z + 2h2p + hz2 + 2hzp"
        and not r["equal"]
        and not r["locus_in_chern_span"]
    )


# operators


def random_poly(rng: random.Random, n: int, terms: int = 5, degree: int = 4) -> Polynomial:
    out = {}
    for _ in range(terms):
        e = [0] * (2 * n)
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(2 * n)] += 1
        out[tuple(e)] = rng.randint(-5, 5)
    return Polynomial(out, n)


def check_word_independence(family: str, n: int, samples: int, primed: bool = False, seed: int = 0) -> bool:
    rng = random.Random(seed)
    W = WeylGroup(family, n)
    polys = [random_poly(rng, n) for _ in range(samples)]
    for w in W.elements():
        words = W.reduced_words(w)
        if len(words) < 2:
            continue
        a, b = words[0], words[-1]
        for f in polys:
            if apply_word(f, a, family, primed) != apply_word(f, b, family, primed):
                return False
    return True


def braid_relations(family: str, n: int) -> list[tuple[list, list]]:
    W = WeylGroup(family, n)
    gens = W.generators()
    out = []
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            m = _order(W, a, b)
            wa = [a if k % 2 == 0 else b for k in range(m)]
            wb = [b if k % 2 == 0 else a for k in range(m)]
            out.append((wa, wb))
    return out


def _order(W, a, b) -> int:
    g = W.generator(a) * W.generator(b)
    x = g
    m = 1
    while not x.is_identity():
        x = x * g
        m += 1
    return m


def check_operator_relations(family: str, n: int, samples: int, primed: bool = False, seed: int = 0) -> bool:
    rng = random.Random(seed)
    W = WeylGroup(family, n)
    rels = braid_relations(family, n)
    for _ in range(samples):
        f = random_poly(rng, n)
        for g in W.generators():
            if not apply_generator(apply_generator(f, g, family, primed), g, family, primed).is_zero():
                return False
        for wa, wb in rels:
            if apply_word(f, wa, family, primed) != apply_word(f, wb, family, primed):
                return False
    return True


# suite assembly


def _suite_examples_n2(n):
    return [(f"c{list(e)} table", check_table_entry, (e, t)) for e, t in TABLE_N2.items()]


def _suite_examples_n3(n):
    tasks = [(f"c{list(e)} table", check_table_entry, (e, t)) for e, t in TABLE_N3.items()]
    for m in range(1, (n or 4) + 1):
        tasks += [(f"c_s{i} n={m}", check_simple_reflection, (i, m)) for i in range(m)]
    tasks += [(f"D generators n={m}", check_d_generators, (m,)) for m in (2, 3, 4)]
    return tasks


def _suite_mgras(n):
    tasks = []
    for m in range(1, (n or 3) + 1):
        for lam in strict_partitions(m):
            tasks.append((f"C {lam} n={m}", check_closed, ("C", lam, m)))
            tasks.append((f"B {lam} n={m}", check_closed, ("B", lam, m)))
        if m >= 2:
            for lam in strict_partitions(m - 1):
                tasks.append((f"D-I {lam} n={m}", check_closed, ("D", lam, m, 1)))
                tasks.append((f"D-II {lam} n={m}", check_closed, ("D", lam, m, 2)))
        for k in range(1, m + 1):
            tasks.append((f"C staircase {k} n={m}", check_staircase, ("C", k, m)))
            if k < m:
                tasks.append((f"D staircase {k} n={m}", check_staircase, ("D", k, m)))
    return tasks


def _suite_posit(n):
    tasks = []
    for m in range(1, (n or 3) + 1):
        for w in WeylGroup("A", m).elements():
            tasks.append((f"C {w}", check_positivity, ("C", w.entries)))
            tasks.append((f"B {w}", check_positivity, ("B", w.entries)))
            tasks.append((f"C to A {w}", check_c_to_a, (w.entries,)))
            tasks.append((f"A double {w}", check_a_double_to_single, (w.entries,)))
            if m >= 2:
                tasks.append((f"D {w}", check_positivity, ("D", w.entries)))
                if w.entries[0] == 1:
                    tasks.append((f"D fixed 1 {w}", check_d_fixed_one, (w.entries,)))
    return tasks


def _suite_cauchy(n):
    return [(f"cauchy n={m}", check_cauchy, (m,)) for m in range(1, (n or 3) + 1)]


def _suite_orth(n):
    tasks = []
    for m in range(1, (n or 3) + 1):
        tasks.append((f"orth2 n={m}", check_orth2_all, (m,)))
        count = 0 if m <= 2 else 60
        for u, lam, v, mu in orth1_samples(m, count):
            tasks.append((f"orth1 {list(u)} {lam} {list(v)} {mu}", check_orth1, (u, lam, v, mu, m)))
    tasks += [(f"characterization n={m}", check_characterization, (m,)) for m in range(1, (n or 3) + 1)]
    return tasks


def _suite_vanishing(n):
    return [
        (f"vanishing {w}", check_vanishing, (w.entries,))
        for m in range(1, (n or 3) + 1)
        for w in WeylGroup("C", m).elements()
    ]


def _suite_stability(n):
    top = n or 3
    tasks = [(f"C stable from rank {m}", check_c_stability, (m, top)) for m in range(1, top)]
    tasks.append(("C stability counterexample", check_stability_counterexample, ()))
    tasks.append(("A shift S4", check_a_shift, (4,)))
    tasks.append(("B single W2 -> W3", check_b_single_stability, (2, 3)))
    return tasks


def _suite_keylemma(n):
    return [
        (f"keylemma {mu} n={m}", check_keylemma, (mu, m))
        for m in range(2, (n or 4) + 1)
        for mu in strict_partitions(m - 1)
    ]


def _suite_curprop(n):
    m = n or 3
    return [
        (f"type A constants inside C S{m}", check_a_constants_embed, (m,)),
        ("f(s2,s2,[2,3,1]) = 1", check_s2_square, ()),
        ("shift identity S2 -> S3", check_shift_identity, (2,)),
        (f"stability and shift S{m}", check_stability_shift, (m,)),
        ("first degree S4", check_first_degree, (4,)),
    ]


def _suite_structure(n):
    tasks = []
    E2 = WeylGroup("C", 2).elements()
    tasks += [(f"W2 {u} {v}", check_structure_oracle, (u.entries, v.entries, 2)) for u in E2 for v in E2]
    rng = random.Random(0)
    E3 = WeylGroup("C", 3).elements()
    for _ in range(100 if n is None else n):
        u, v = rng.choice(E3), rng.choice(E3)
        tasks.append((f"W3 {u} {v}", check_structure_oracle, (u.entries, v.entries, 3)))
    return tasks


def _suite_lagcor(n):
    tasks = []
    for m in range(1, (n or 3) + 1):
        for k in range(1, m + 1):
            tasks.append((f"single row {k} n={m}", check_single_row, (k, m)))
            for j in range(1, k + 1):
                tasks.append((f"staircase minus {j} k={k} n={m}", check_staircase_minus, (k, j, m)))
    tasks += [
        ("Kempf-Laksov (1)", check_kempf_laksov, ((1,), (1,), 3)),
        ("Kempf-Laksov (2)", check_kempf_laksov, ((2,), (2,), 3)),
        ("Kempf-Laksov (1,1)", check_kempf_laksov, ((1, 1), (1, 2), 3)),
        ("Kempf-Laksov (2,1)", check_kempf_laksov, ((2, 1), (1, 3), 3)),
        ("Kempf-Laksov (3)", check_kempf_laksov, ((3,), (2,), 3)),
        ("Kempf-Laksov (1,1,1)", check_kempf_laksov, ((1, 1, 1), (1, 2, 3), 3)),
    ]
    return tasks


def _suite_lq1(n):
    return [("LQ1 classes", check_lq1, ())]


def _suite_operators(n):
    # type D is checked with the primed operators only
    tasks = []
    cases = [("C", 3, False), ("C", 3, True), ("B", 3, False), ("D", 3, True), ("A", 4, False)]
    for fam, m, primed in cases:
        tag = "'" if primed else ""
        tasks.append((f"word independence{tag} {fam}{m}", check_word_independence, (fam, m, 20, primed)))
    for fam, m, primed in cases:
        tag = "'" if primed else ""
        m = n or 4
        tasks.append((f"nil and braid{tag} {fam}{m}", check_operator_relations, (fam, m, 100, primed)))
    return tasks


SUITES = {
    "examples-n2": _suite_examples_n2,
    "examples-n3": _suite_examples_n3,
    "mgras": _suite_mgras,
    "posit": _suite_posit,
    "cauchy": _suite_cauchy,
    "orth": _suite_orth,
    "vanishing": _suite_vanishing,
    "stability": _suite_stability,
    "keylemma": _suite_keylemma,
    "curprop": _suite_curprop,
    "structure": _suite_structure,
    "lagcor-consistency": _suite_lagcor,
    "lq1": _suite_lq1,
    "operators": _suite_operators,
}


def _run_task(task) -> Result:
    label, fn, args = task
    try:
        ok = bool(fn(*args))
        return Result(label, ok)
    except Exception as exc:  # report, do not abort the sweep
        return Result(label, False, f"{type(exc).__name__}: {exc}")


def run_suite(name: str, n: int | None = None, jobs: int = 1) -> list[Result]:
    if name not in SUITES:
        raise KeyError(name)
    tasks = SUITES[name](n)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_run_task(t) for t in tasks]
