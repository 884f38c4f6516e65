"""Double and single Schubert polynomials of types A, B, C and D.

Each family is produced from a top polynomial by divided differences:

    A:  S_w = d_{w^-1 v0} Delta
    C:  c_w = (-1)^{n(n-1)/2} d'_{w^-1 w0} (Delta Q~(X,Y))
    B:  same with P~_n(X,Y) and the type B operator d_0
    D:  same with P~_{n-1}(X,Y), the box operator and the type D longest element

Single polynomials are the specialization Y = 0.  Because the operators only
touch X, the whole family is computed once per rank by walking down the weak
order from the top, one operator per element.
"""
from __future__ import annotations

from fractions import Fraction

from .divided import apply_generator
from .kernels import flip_last_y, full_kernel, ptilde, qtilde
from .partitions import (
    contains,
    d_dual,
    d_sign_exponent,
    dual,
    excess,
    intertwining,
    staircase,
    strict_partitions,
    union,
    weak_intertwining,
)
from .polynomial import Polynomial, X, Y, determinant, elementary
from .weyl import SignedPermutation, WeylGroup, l_set, max_grassmannian


class IntegralityError(ArithmeticError):
    pass


def check_denominators(f: Polynomial, family: str) -> Polynomial:
    """Integer coefficients in types A and C, powers of 2 in types B and D."""
    for d in f.denominators():
        if family in ("A", "C") or d & (d - 1):
            raise IntegralityError(f"unexpected denominator {d} in type {family}")
    return f


class _FamilyCache:
    def __init__(self, family: str, n: int, single: bool):
        self.family = family
        self.n = n
        self.single = single
        self.W = WeylGroup(family, n)
        self.top = self.W.longest()
        f = full_kernel(family, n)
        if family != "A" and (n * (n - 1) // 2) % 2:
            f = -f
        if single:
            f = f.set_y_zero()
        self.polys = {self.top: f}

    def get(self, w: SignedPermutation) -> Polynomial:
        W = self.W
        W.check(w)
        chain = []
        while w not in self.polys:
            lw = W.length(w)
            g = next(g for g in W.generators() if W.length(w * W.generator(g)) > lw)
            chain.append((w, g))
            w = w * W.generator(g)
        f = self.polys[w]
        primed = self.family != "A"
        for v, g in reversed(chain):
            f = apply_generator(f, g, self.family, primed)
            self.polys[v] = f
        return f


_CACHES: dict[tuple, _FamilyCache] = {}


def _cache(family: str, n: int, single: bool) -> _FamilyCache:
    key = (family, n, single)
    if key not in _CACHES:
        _CACHES[key] = _FamilyCache(family, n, single)
    return _CACHES[key]


def clear_caches() -> None:
    _CACHES.clear()


def double_schubert(family: str, n: int, w: SignedPermutation) -> Polynomial:
    return check_denominators(_cache(family, n, False).get(w), family)


def single_schubert(family: str, n: int, w: SignedPermutation) -> Polynomial:
    return _cache(family, n, True).get(w)


def schubert(family: str, n: int, w: SignedPermutation, single: bool = False) -> Polynomial:
    return single_schubert(family, n, w) if single else double_schubert(family, n, w)


def family_table(family: str, n: int, single: bool = False) -> dict[SignedPermutation, Polynomial]:
    return {w: schubert(family, n, w, single) for w in WeylGroup(family, n).elements()}


def _det_y(top, bottom, n: int, shift: int) -> Polynomial:
    """det(e_{top_i - bottom_j}(Y_{shift - bottom_j}))."""
    k = len(top)
    m = [[elementary(top[i] - bottom[j], Y(shift - bottom[j]), n) for j in range(k)] for i in range(k)]
    d = determinant(m)
    return d if isinstance(d, Polynomial) else Polynomial.const(d, n)


def closed_max_grassmannian(family: str, lam: tuple[int, ...], n: int, variant: int = 1) -> Polynomial:
    """The closed formula for the polynomial of a maximal Grassmannian element.

    Types B and C sum over pairs of disjoint strict partitions.  Type D has two
    forms: variant 1 uses sequences that may end in a zero part, variant 2 uses
    ordinary strict partitions and the alphabet with y_n negated according to
    the parity of n - l(lam).
    """
    lam = tuple(lam)
    if family in ("B", "C"):
        fn = qtilde if family == "C" else ptilde
        lp = dual(lam, n)
        k = len(lp)
        sign0 = -1 if (excess(lam) + sum(lp)) % 2 else 1
        out = Polynomial.zero(n)
        for beta in strict_partitions(n):
            if len(beta) != k or not contains(beta, lp):
                continue
            dy = _det_y(beta, lp, n, n)
            if dy.is_zero():
                continue
            for alpha in strict_partitions(n):
                if set(alpha) & set(beta):
                    continue
                s = -1 if (intertwining(alpha, beta) + sum(beta)) % 2 else 1
                term = fn(alpha, X(n), n) * fn(dual(union(alpha, beta), n), Y(n), n) * dy
                out = out + term.scale(s)
        return out.scale(sign0)
    if family != "D":
        raise ValueError(f"no closed formula in type {family}")
    if variant == 1:
        lp = d_dual(lam, n)
        sign0 = -1 if (d_sign_exponent(lam, n) + sum(lp)) % 2 else 1
        betas = [b for b in strict_partitions(n - 1, plus=True) if len(b) == len(lp) and contains(b, lp)]
        stat = weak_intertwining
        flip = False
    elif variant == 2:
        lp = dual(lam, n - 1)
        sign0 = -1 if (excess(lam) + sum(lp)) % 2 else 1
        betas = [b for b in strict_partitions(n - 1) if len(b) == len(lp) and contains(b, lp)]
        stat = intertwining
        flip = (n - len(lam)) % 2 == 0
    else:
        raise ValueError("variant must be 1 or 2")
    out = Polynomial.zero(n)
    for beta in betas:
        dy = _det_y(beta, lp, n, n - 1)
        if dy.is_zero():
            continue
        for alpha in strict_partitions(n - 1):
            if set(alpha) & set(beta):
                continue
            s = -1 if (stat(alpha, beta) + sum(beta)) % 2 else 1
            py = ptilde(dual(union(alpha, beta), n - 1), Y(n), n)
            if flip:
                py = flip_last_y(py)
            out = out + (ptilde(alpha, X(n), n) * py * dy).scale(s)
    return out.scale(sign0)


def staircase_formula(family: str, k: int, n: int) -> Polynomial:
    """Sum over alpha in D_k of Q~_alpha(X) Q~_{rho_k minus alpha}(Y).

    In type D the P~ functions are used, with y_n negated when n = k mod 2.
    """
    out = Polynomial.zero(n)
    fn = qtilde if family == "C" else ptilde
    for alpha in strict_partitions(k):
        py = fn(dual(alpha, k), Y(n), n)
        if family == "D" and (n - k) % 2 == 0:
            py = flip_last_y(py)
        out = out + fn(alpha, X(n), n) * py
    return out


def staircase_element(family: str, k: int, n: int) -> SignedPermutation:
    return max_grassmannian(family, staircase(k), n)


def type_a_twist(f: Polynomial) -> Polynomial:
    """f(v0 X, -Y): reverse the x variables and negate the y variables."""
    n = f.n
    images = [(n - 1 - i, 1) for i in range(n)] + [(n + j, -1) for j in range(n)]
    return f.substitute(images)


def positivity_form(family: str, n: int, w: SignedPermutation) -> tuple[Polynomial, Polynomial]:
    """Return (lhs, rhs) for the type A expression of a permutation's polynomial.

    In types B and C lhs is the polynomial of w itself; in type D it is the sum
    over the elements of wH with the same length.  rhs is S_{w*}(v0 X, -Y).
    """
    if not w.is_unsigned():
        raise ValueError("positivity form needs an element of S_n")
    star = WeylGroup("A", n).star(w)
    rhs = type_a_twist(double_schubert("A", n, star))
    if family in ("B", "C"):
        lhs = double_schubert(family, n, w)
    elif family == "D":
        lhs = Polynomial.zero(n)
        for v in l_set(w):
            lhs = lhs + double_schubert("D", n, v)
    else:
        raise ValueError(f"no positivity form in type {family}")
    return lhs, rhs


def restrict_stable(family: str, w: SignedPermutation, m: int, n: int, single: bool = False) -> Polynomial:
    """Polynomial of w in W_m embedded in rank n, restricted back to rank m."""
    return schubert(family, n, w.embed(n), single).restrict(m)


def substitute_y_by_x(f: Polynomial, w: SignedPermutation) -> Polynomial:
    """f(X, wX): y_i -> x_{w(i)} with the sign of w(i)."""
    n = f.n
    images = [(i, 1) for i in range(n)]
    images += [(abs(v) - 1, 1 if v > 0 else -1) for v in w.entries]
    return f.substitute(images)


def vanishing_value(n: int) -> Polynomial:
    """2^n x1...xn prod_{i>j} (x_i^2 - x_j^2)."""
    out = Polynomial.const(2 ** n, n)
    for i in range(1, n + 1):
        out = out * Polynomial.x(i, n)
        for j in range(1, i):
            out = out * (Polynomial.x(i, n) ** 2 - Polynomial.x(j, n) ** 2)
    return out


def kernel_vanishing_value(n: int) -> Polynomial:
    """prod_{i >= j} (x_i + x_j)."""
    out = Polynomial.const(1, n)
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            out = out * (Polynomial.x(i, n) + Polynomial.x(j, n))
    return out


def keylemma_sides(mu: tuple[int, ...], n: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of the alternating P~ identity for mu in D_{n-1}."""
    r = len(mu)
    lhs = Polynomial.zero(n)
    for i in range(r):
        rest = mu[:i] + mu[i + 1:]
        term = ptilde(rest, Y(n), n) * elementary(mu[i], Y(n - 1), n)
        lhs = lhs + (term if i % 2 == 0 else -term)
    p = ptilde(mu, Y(n), n)
    rhs = (p if r % 2 else -p) + flip_last_y(p)
    return lhs, rhs


def b_vs_c_ratio(w: SignedPermutation, n: int) -> Fraction | None:
    """The constant c with B_w(X) = c C_w(X), or None if they are not proportional."""
    b = single_schubert("B", n, w)
    c = single_schubert("C", n, w)
    if c.is_zero():
        return None
    e, v = c.sorted_terms()[0]
    ratio = Fraction(b.coefficient(e)) / v
    return ratio if b == c.scale(ratio) else None
