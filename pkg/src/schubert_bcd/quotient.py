"""Scalar products, the product basis and structure constants.

The type C scalar product is <f, g> = d_{w0}(f g).  Over the invariants it
pairs the products c_w(X) c_lam(X) (w in S_n, lam strict) with the adjoint
elements c_{w v0}(-v0 X) c_{lam'}(X), so the coefficient of a product basis
element in f is <f, adjoint> up to invariants; taking constant terms gives
the coefficient modulo the ideal of positive-degree invariants.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .divided import apply_element, apply_word
from .partitions import dual, strict_partitions
from .kernels import qtilde
from .polynomial import Polynomial, X, elementary
from .schubert import double_schubert, single_schubert
from .weyl import SignedPermutation, WeylGroup, max_grassmannian


class NotStable(ValueError):
    pass


def scalar_product(f: Polynomial, g: Polynomial) -> Polynomial:
    W = WeylGroup("C", f.n)
    return apply_element(f * g, W.longest(), "C")


def reverse_negate_x(f: Polynomial) -> Polynomial:
    """f(-v0 X): x_i -> -x_{n+1-i}."""
    n = f.n
    return f.substitute([(n - 1 - i, -1) for i in range(n)] + [(n + j, 1) for j in range(n)])


def x_to_reversed_y(f: Polynomial) -> Polynomial:
    """f(v0 Y) for f in X only: x_i -> y_{n+1-i}."""
    n = f.n
    return f.substitute([(2 * n - 1 - i, 1) for i in range(n)] + [None] * n)


def x_to_y(f: Polynomial) -> Polynomial:
    n = f.n
    return f.substitute([(n + i, 1) for i in range(n)] + [None] * n)


def q_single(lam, n: int) -> Polynomial:
    """c_lam(X), the single polynomial of the maximal Grassmannian element."""
    return single_schubert("C", n, max_grassmannian("C", tuple(lam), n))


def product_basis_element(w: SignedPermutation, lam, n: int) -> Polynomial:
    return single_schubert("C", n, w) * q_single(lam, n)


@lru_cache(maxsize=None)
def adjoint_element(w: SignedPermutation, lam: tuple[int, ...], n: int) -> Polynomial:
    v0 = WeylGroup("A", n).longest()
    return reverse_negate_x(single_schubert("C", n, w * v0)) * q_single(dual(lam, n), n)


def product_basis_index(n: int) -> list[tuple[SignedPermutation, tuple[int, ...]]]:
    return [(w, lam) for w in WeylGroup("A", n).elements() for lam in strict_partitions(n)]


def _degree(w, lam, n):
    return WeylGroup("A", n).length(w) + sum(lam)


def expand_product_basis(f: Polynomial, degree: int | None = None) -> dict:
    """Constant-term coefficients of f on the product basis.

    Only basis elements of the given degree are paired when ``degree`` is set,
    which is all that matters for a homogeneous f.
    """
    n = f.n
    out = {}
    for w, lam in product_basis_index(n):
        if degree is not None and _degree(w, lam, n) != degree:
            continue
        c = scalar_product(f, adjoint_element(w, lam, n)).constant_term()
        if c:
            out[(w, lam)] = c
    return out


def solve_exact(rows: list[list], rhs: list) -> list[Fraction]:
    """Solve a square nonsingular system over Q by Gauss-Jordan elimination."""
    k = len(rows)
    a = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(k):
            if r != col and a[r][col] != 0:
                m = a[r][col]
                a[r] = [x - m * y for x, y in zip(a[r], a[col])]
    return [a[r][k] for r in range(k)]


def matrix_rank(rows: list[list]) -> int:
    a = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][col] != 0:
                m = a[r][col] / a[rank][col]
                a[r] = [x - m * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


@lru_cache(maxsize=None)
def _change_of_basis(n: int, d: int):
    W = WeylGroup("C", n)
    cols = [w for w in W.elements() if W.length(w) == d]
    rows = [(w, lam) for w, lam in product_basis_index(n) if _degree(w, lam, n) == d]
    if len(rows) != len(cols):
        raise AssertionError("product basis and Schubert basis differ in size")
    m = [[0] * len(cols) for _ in rows]
    for j, w in enumerate(cols):
        exp = expand_product_basis(single_schubert("C", n, w), d)
        for i, key in enumerate(rows):
            m[i][j] = exp.get(key, 0)
    return rows, cols, m


def reduce_to_schubert_basis(f: Polynomial) -> dict[SignedPermutation, Fraction]:
    """Coordinates of f modulo the invariant ideal in the single basis c_w(X)."""
    n = f.n
    out = {}
    for d in sorted({sum(e) for e in f.terms}):
        if d > n * n:
            continue
        part = Polynomial({e: c for e, c in f.terms.items() if sum(e) == d}, n, True)
        rows, cols, m = _change_of_basis(n, d)
        if not cols:
            continue
        exp = expand_product_basis(part, d)
        sol = solve_exact(m, [exp.get(key, 0) for key in rows])
        for w, c in zip(cols, sol):
            if c:
                out[w] = c.numerator if c.denominator == 1 else c
    return out


def _monomials(d: int, n: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, left):
        if len(prefix) == n - 1:
            out.append(tuple(prefix) + (left,) + (0,) * n)
            return
        for p in range(left, -1, -1):
            rec(prefix + [p], left - p)

    rec([], d)
    return out


def reduce_by_linear_algebra(f: Polynomial) -> dict[SignedPermutation, Fraction]:
    """Same coordinates as ``reduce_to_schubert_basis``, found by brute force.

    In each degree d, solve f = sum a_w c_w(X) + sum b e_k(X^2) m over the
    monomials of degree d; the a_w are unique because the c_w are independent
    modulo the ideal.
    """
    n = f.n
    out = {}
    for d in sorted({sum(e) for e in f.terms}):
        part = Polynomial({e: c for e, c in f.terms.items() if sum(e) == d}, n, True)
        cols, keys, left, pivots, rank = _monomial_system(n, d)
        b = [Fraction(part.coefficient(m)) for m in keys]
        eb = [sum((row[j] * b[j] for j in range(len(b)) if row[j]), Fraction(0)) for row in left]
        if any(eb[rank:]):
            raise ArithmeticError("no solution; the spanning set is incomplete")
        sol = dict(zip(pivots, eb))
        for j, w in enumerate(cols):
            c = sol.get(j, 0)
            if c:
                out[w] = c.numerator if c.denominator == 1 else c
    return out


@lru_cache(maxsize=None)
def _monomial_system(n: int, d: int):
    """Row-reduce the spanning set of degree d once; keep the row operations."""
    W = WeylGroup("C", n)
    cols = [w for w in W.elements() if W.length(w) == d]
    vecs = [single_schubert("C", n, w) for w in cols]
    for k in range(1, n + 1):
        if 2 * k > d:
            break
        g = elementary(k, X(n), n)
        g = Polynomial({tuple(2 * p for p in e): c for e, c in g.terms.items()}, n, True)
        vecs += [g * Polynomial({m: 1}, n, True) for m in _monomials(d - 2 * k, n)]
    keys = _monomials(d, n)
    rows = len(keys)
    a = [[Fraction(v.coefficient(m)) for v in vecs] + [Fraction(int(i == r)) for i in range(rows)] for r, m in enumerate(keys)]
    k = len(vecs)
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        a[r] = [v / p if v else v for v in a[r]]
        nz = [j for j, v in enumerate(a[r]) if v]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                m = a[i][col]
                row = a[i]
                for j in nz:
                    row[j] -= m * a[r][j]
        pivots.append(col)
        r += 1
    left = [row[k:] for row in a]
    return cols, keys, left, pivots, r


def structure_constants(family: str, u: SignedPermutation, v: SignedPermutation, n: int) -> dict:
    """Coefficients f(u,v,w) of sigma_u sigma_v in the Schubert basis.

    Type C works in Z[X] modulo positive-degree W_n invariants.  Type A uses
    the constant term of d_w(S_u S_v) and requires an n-stable pair.
    """
    if family == "C":
        f = single_schubert("C", n, u) * single_schubert("C", n, v)
        return reduce_to_schubert_basis(f)
    if family == "A":
        if not is_n_stable(u, v, n):
            raise NotStable(f"({u}, {v}) is not {n}-stable")
        u, v = u.embed(n), v.embed(n)
        A = WeylGroup("A", n)
        f = single_schubert("A", n, u) * single_schubert("A", n, v)
        d = A.length(u) + A.length(v)
        out = {}
        for w in A.elements():
            if A.length(w) != d:
                continue
            c = apply_word(f, A.reduced_word(w), "A").constant_term()
            if c:
                out[w] = c
        return out
    raise ValueError(f"structure constants are not implemented for type {family}")


def degree_vector(w: SignedPermutation) -> list[int]:
    """d_i(w) = degree of S_w in x_i, for i = 1..n."""
    f = single_schubert("A", w.n, w)
    return [max(f.deg_in(f"x{i}"), 0) for i in range(1, w.n + 1)]


def first_degree(w: SignedPermutation) -> int:
    """#{j : w(i) > w(j) for some i < j}, which equals d_1(w)."""
    e = w.entries
    return sum(1 for j in range(len(e)) if any(e[i] > e[j] for i in range(j)))


def is_n_stable(u: SignedPermutation, v: SignedPermutation, n: int) -> bool:
    """d_i(u) + d_i(v) <= max(n - i, 0) for every i."""
    du, dv = degree_vector(u), degree_vector(v)
    m = max(len(du), len(dv))
    du += [0] * (m - len(du))
    dv += [0] * (m - len(dv))
    return all(a + b <= max(n - i, 0) for i, (a, b) in enumerate(zip(du, dv), 1))


def in_staircase_span(f: Polynomial, n: int) -> bool:
    """True when every monomial x^a of f has a_i <= n - i (and no y)."""
    k = f.n
    for e in f.terms:
        if any(e[k:]):
            return False
        if any(p > max(n - i, 0) for i, p in enumerate(e[:k], 1)):
            return False
    return True


def is_n_stable_direct(u: SignedPermutation, v: SignedPermutation, n: int) -> bool:
    """Stability read off the product S_u S_v itself."""
    m = max(u.n, v.n)
    f = single_schubert("A", m, u.embed(m)) * single_schubert("A", m, v.embed(m))
    return in_staircase_span(f, n)


def stable_structure_constants(u: SignedPermutation, v: SignedPermutation) -> dict:
    """Type A constants in the smallest rank where the pair is stable."""
    n = max(u.n, v.n)
    while not is_n_stable(u, v, n):
        n += 1
    return {w: c for w, c in structure_constants("A", u, v, n).items()}


def cauchy_sides(n: int) -> tuple[Polynomial, Polynomial]:
    """(c_{w0}(X,Y), sum of adjoint(w,lam)(X) c_w(v0 Y) c_lam(Y))."""
    lhs = double_schubert("C", n, WeylGroup("C", n).longest())
    rhs = Polynomial.zero(n)
    for w, lam in product_basis_index(n):
        rhs = rhs + adjoint_element(w, lam, n) * x_to_reversed_y(single_schubert("C", n, w)) * x_to_y(
            q_single(lam, n)
        )
    return lhs, rhs


def reconstruct_family(top: Polynomial) -> dict[SignedPermutation, Polynomial]:
    """P_w = d'_{w^-1 w0}(top) for every w, using greedy reduced words."""
    n = top.n
    W = WeylGroup("C", n)
    w0 = W.longest()
    return {w: apply_element(top, w.inverse() * w0, "C", primed=True) for w in W.elements()}


def characterization_report(top: Polynomial) -> dict[str, bool]:
    """Check the hypotheses that single out the type C family.

    (i) the Cauchy-type identity for the family built from ``top``;
    (ii) P_{v0}(X) = x2 x3^2 ... xn^{n-1} and P_{rho_n}(X) = Q~_{rho_n}(X).
    """
    n = top.n
    fam = reconstruct_family(top)
    single = {w: f.set_y_zero() for w, f in fam.items()}
    v0 = WeylGroup("A", n).longest()
    rhs = Polynomial.zero(n)
    for w, lam in product_basis_index(n):
        adj = reverse_negate_x(single[w * v0]) * single[max_grassmannian("C", dual(lam, n), n)]
        rhs = rhs + adj * x_to_reversed_y(single[w]) * x_to_y(single[max_grassmannian("C", lam, n)])
    mono = [0] * (2 * n)
    for i in range(n):
        mono[i] = i
    rho = tuple(range(n, 0, -1))
    return {
        "cauchy": rhs == top,
        "normalized_v0": single[v0] == Polynomial.monomial(mono, n),
        "normalized_rho": single[max_grassmannian("C", rho, n)] == qtilde(rho, X(n), n),
        "matches_family": all(fam[w] == double_schubert("C", n, w) for w in fam),
    }
