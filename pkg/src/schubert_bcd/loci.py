"""Degeneracy locus classes.

Chern roots model the bundles: E* has roots X = (x1..xn) and the flag
bundle F_i* has roots Y_i = (y1..yi).  The Lagrangian and quadric classes
are the closed formulas from ``schubert``; this module adds the type A
determinantal formula, the two special cases used as cross-checks, the small
Chow ring example and a renderer that rewrites a class in Chern classes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .kernels import qtilde
from .partitions import staircase, strict_partitions
from .quotient import matrix_rank
from .polynomial import Alphabet, Polynomial, X, Y, complete, determinant, elementary
from .schubert import closed_max_grassmannian


def chern_series(alphabet: Alphabet, n: int) -> list[Polynomial]:
    """[c_0, c_1, ...] of a bundle with the given Chern roots."""
    k = len(alphabet.indices(n))
    return [elementary(p, alphabet, n) for p in range(k + 1)]


def virtual_series(cq: list, cv: list, degree: int) -> list:
    """c(Q - V) = c(Q) / c(V), truncated after ``degree``."""
    inv = [1]
    for k in range(1, degree + 1):
        s = 0
        for j in range(1, k + 1):
            if j < len(cv):
                s = s - cv[j] * inv[k - j]
        inv.append(s)
    out = []
    for k in range(degree + 1):
        s = 0
        for j in range(k + 1):
            if j < len(cq):
                s = s + cq[j] * inv[k - j]
        out.append(s)
    return out


def kempf_laksov(lam: tuple[int, ...], cq: list, cvs: list[list], method: str = "auto"):
    """det(c_{lam_i + j - i}(Q - V_{r_i})) with one series per row."""
    k = len(lam)
    if len(cvs) != k:
        raise ValueError("need one Chern series per part")
    top = max(lam) + k if lam else 0
    rows = []
    for i in range(k):
        c = virtual_series(cq, cvs[i], top)
        row = []
        for j in range(k):
            d = lam[i] + j - i
            row.append(c[d] if 0 <= d < len(c) else 0)
        rows.append(row)
    return determinant(rows, method)


def lagrangian_class(family: str, lam: tuple[int, ...], n: int, variant: int = 1) -> Polynomial:
    return closed_max_grassmannian(family, tuple(lam), n, variant)


def single_row_class(k: int, n: int) -> Polynomial:
    """sum_p c_p(E*) s_{k-p}(F*_{n+1-k}) with s the complete symmetric functions."""
    out = Polynomial.zero(n)
    for p in range(k + 1):
        out = out + elementary(p, X(n), n) * complete(k - p, Y(n + 1 - k), n)
    return out


def staircase_minus_part(k: int, j: int) -> tuple[int, ...]:
    return tuple(p for p in staircase(k) if p != j)


def staircase_minus_part_class(k: int, j: int, n: int) -> Polynomial:
    """The class for lam = rho_k minus the part j, as an alternating sum."""
    out = Polynomial.zero(n)
    rho = staircase(k)
    for p in range(j, k + 1):
        inner = Polynomial.zero(n)
        for alpha in strict_partitions(k):
            if p in alpha:
                continue
            sgn = sum(1 for a in alpha if a > p)
            rest = tuple(q for q in rho if q not in alpha and q != p)
            term = qtilde(alpha, X(n), n) * qtilde(rest, Y(n), n)
            inner = inner + (-term if sgn % 2 else term)
        term = elementary(p - j, Y(n - j), n) * inner
        out = out + (-term if (k - p) % 2 else term)
    return out


# Chern-class display


def symmetric_reduce(f: Polynomial, alphabet: Alphabet) -> dict[tuple[int, ...], Polynomial]:
    """Write f as sum e^m(alphabet) * coefficient with coefficients free of the alphabet.

    Raises ValueError when f is not symmetric in the alphabet.
    """
    n = f.n
    idx = alphabet.indices(n)
    m = len(idx)
    es = [elementary(k, alphabet, n) for k in range(m + 1)]
    out: dict[tuple[int, ...], Polynomial] = {}
    rest = f
    while not rest.is_zero():
        lead = max(tuple(e[i] for i in idx) for e in rest.terms)
        if any(lead[i] < lead[i + 1] for i in range(m - 1)):
            raise ValueError("not symmetric")
        coeff = {}
        for e, c in rest.terms.items():
            if tuple(e[i] for i in idx) == lead:
                t = list(e)
                for i in idx:
                    t[i] = 0
                coeff[tuple(t)] = c
        cpoly = Polynomial(coeff, n, True)
        mult = tuple(lead[i] - (lead[i + 1] if i + 1 < m else 0) for i in range(m))
        prod = cpoly
        for i, p in enumerate(mult):
            if p:
                prod = prod * es[i + 1] ** p
        rest = rest - prod
        out[mult] = out.get(mult, Polynomial.zero(n)) + cpoly
    return out


def _chern_monomial(mult, name) -> list[str]:
    return [f"c{i + 1}({name})" + (f"^{p}" if p > 1 else "") for i, p in enumerate(mult) if p]


def _y_part(b: Polynomial) -> list[tuple[object, list[str]]]:
    n = b.n
    used = [k - n + 1 for k in b.variables() if k >= n]
    top = max(used, default=0)
    for m in range(max(top, 1), n + 1):
        try:
            red = symmetric_reduce(b, Y(m))
        except ValueError:
            continue
        out = []
        for mult, c in red.items():
            out.append((c.constant_term(), _chern_monomial(mult, f"F{m}*")))
        return out
    return [(c, [_y_monomial(e, n)]) for e, c in b.sorted_terms()]


def _y_monomial(e, n) -> str:
    return "*".join(f"y{k - n + 1}" + (f"^{p}" if p > 1 else "") for k, p in enumerate(e) if p and k >= n)


def chern_notation(f: Polynomial) -> str:
    """Rewrite a class as a polynomial in c_p(E*) and c_q(F_m*)."""
    n = f.n
    pieces = []
    for mult, b in sorted(symmetric_reduce(f, X(n)).items(), reverse=True):
        ex = _chern_monomial(mult, "E*")
        for c, ys in _y_part(b):
            factors = [s for s in ex + ys if s]
            pieces.append((c, "*".join(factors)))
    out = []
    for c, mono in pieces:
        if not c:
            continue
        neg = c < 0
        a = -c if neg else c
        body = mono if (a == 1 and mono) else (f"{a}*{mono}" if mono else str(a))
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) or "0"


# The Chow ring Z[h, z, p] / (h^4, z^4 + 2 h^2 z^2, p^2) of a small example.


@dataclass(frozen=True)
class ChowElement:
    terms: tuple[tuple[tuple[int, int, int], int], ...]

    @staticmethod
    def from_dict(d: dict) -> "ChowElement":
        return ChowElement(tuple(sorted((k, v) for k, v in _reduce(d).items() if v)))

    @staticmethod
    def gen(name: str) -> "ChowElement":
        e = {"h": (1, 0, 0), "z": (0, 1, 0), "p": (0, 0, 1)}[name]
        return ChowElement.from_dict({e: 1})

    @staticmethod
    def const(c: int) -> "ChowElement":
        return ChowElement.from_dict({(0, 0, 0): c})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other):
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, 0) + v
        return ChowElement.from_dict(d)

    def __neg__(self):
        return ChowElement(tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowElement.from_dict({k: v * other for k, v in self.terms})
        d = {}
        for (a, b, c), u in self.terms:
            for (a2, b2, c2), v in other.terms:
                k = (a + a2, b + b2, c + c2)
                d[k] = d.get(k, 0) + u * v
        return ChowElement.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ChowElement.const(1)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c), v in sorted(self.terms, key=lambda t: (-sum(t[0]), [-x for x in t[0]])):
            mono = "".join(
                s + (str(p) if p > 1 else "") for s, p in (("h", a), ("z", b), ("p", c)) if p
            )
            coef = "" if (v == 1 and mono) else ("-" if v == -1 and mono else str(v))
            parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _reduce(d: dict) -> dict:
    """Normal form: h^4 = 0, p^2 = 0, z^4 = -2 h^2 z^2."""
    out: dict = {}
    todo = list(d.items())
    while todo:
        (a, b, c), v = todo.pop()
        if not v or a >= 4 or c >= 2:
            continue
        if b >= 4:
            todo.append(((a + 2, b - 2, c), -2 * v))
            continue
        out[(a, b, c)] = out.get((a, b, c), 0) + v
    return {k: v for k, v in out.items() if v}


def lq1_report() -> dict:
    """Compare c1 c2 of E with the class of the locus in the small example."""
    h, z, p = (ChowElement.gen(s) for s in "hzp")
    c1 = 2 * h + z + p
    c2 = h * h + h * z + h * p
    locus = h * h * z + h * h * p
    prod = c1 * c2
    diff = prod - locus
    # degree 3 polynomials in c1, c2 are spanned by c1^3 and c1*c2
    span = [(c1 ** 3).as_dict(), prod.as_dict()]
    keys = sorted(set().union(*span, locus.as_dict()))
    vecs = [[v.get(k, 0) for k in keys] for v in span]
    target = [locus.as_dict().get(k, 0) for k in keys]
    in_span = matrix_rank(vecs + [target]) == matrix_rank(vecs)
    return {
        "c1": c1,
        "c2": c2,
        "c1c2": prod,
        "locus": locus,
        "difference": diff,
        "equal": diff.is_zero(),
        "locus_in_chern_span": in_span,
    }


def lq1_record() -> dict:
    """lq1_report with the classes rendered as strings, ready for JSON."""
    return {k: (v if isinstance(v, bool) else str(v)) for k, v in lq1_report().items()}
