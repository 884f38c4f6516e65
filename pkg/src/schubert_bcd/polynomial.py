"""Exact sparse polynomials in two alphabets X = (x1..xn), Y = (y1..yn).

Exponent tuples have length 2n: the x exponents first, then the y exponents.
Coefficients are exact rationals (int when integral, else Fraction).

>>> x1, x2 = Polynomial.x(1, 2), Polynomial.x(2, 2)
>>> str((x1 + x2) ** 2)
'x1^2 + 2*x1*x2 + x2^2'
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterable, Sequence

from . import _backend as K

ZERO_DEGREE = -math.inf  # degree of the zero polynomial


class RankMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


def var_index(name: str, n: int) -> int:
    m = re.fullmatch(r"([xy])_?(\d+)", name)
    if not m:
        raise ValueError(f"bad variable name {name!r}")
    k = int(m.group(2))
    if not 1 <= k <= n:
        raise ValueError(f"{name} out of range for rank {n}")
    return k - 1 if m.group(1) == "x" else n + k - 1


def var_name(k: int, n: int) -> str:
    return f"x{k + 1}" if k < n else f"y{k - n + 1}"


class Polynomial:
    __slots__ = ("terms", "n")

    def __init__(self, terms: dict | None = None, n: int = 0, _clean: bool = False):
        self.n = n
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            width = 2 * n
            out = {}
            for e, c in terms.items():
                if len(e) != width:
                    raise RankMismatch(f"exponent {e} does not fit rank {n}")
                c = _norm(c)
                if c:
                    out[tuple(e)] = c
            self.terms = out

    # constructors
    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls({}, n, True)

    @classmethod
    def const(cls, c, n: int) -> "Polynomial":
        c = _norm(c)
        return cls({(0,) * (2 * n): c} if c else {}, n, True)

    @classmethod
    def monomial(cls, exps: Sequence[int], n: int, c=1) -> "Polynomial":
        return cls({tuple(exps): c}, n)

    @classmethod
    def gen(cls, k: int, n: int) -> "Polynomial":
        e = [0] * (2 * n)
        e[k] = 1
        return cls({tuple(e): 1}, n, True)

    @classmethod
    def x(cls, i: int, n: int) -> "Polynomial":
        return cls.gen(i - 1, n)

    @classmethod
    def y(cls, j: int, n: int) -> "Polynomial":
        return cls.gen(n + j - 1, n)

    @classmethod
    def parse(cls, text: str, n: int) -> "Polynomial":
        """Parse a polynomial written with + - * ^ / and parentheses."""
        return _Parser(text, n).parse()

    # basic protocol
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise RankMismatch(f"rank {self.n} vs rank {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other, self.n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(K.lincomb(self.terms, other.terms, 1), self.n, True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(K.lincomb(self.terms, other.terms, -1), self.n, True)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.n, True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(K.mul(self.terms, other.terms), self.n, True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.const(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, n={self.n})"

    def __str__(self):
        return to_text(self)

    def scale(self, c) -> "Polynomial":
        c = _norm(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial({e: _norm(v * c) for e, v in self.terms.items()}, self.n, True)

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in graded-lex descending order, x1 > ... > xn > y1 > ... > yn."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def degree(self):
        return max((sum(e) for e in self.terms), default=ZERO_DEGREE)

    def deg_in(self, name: str):
        k = var_index(name, self.n)
        return max((e[k] for e in self.terms), default=ZERO_DEGREE)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get((0,) * (2 * self.n), 0)

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), 0)

    def variables(self) -> set[int]:
        return {k for e in self.terms for k, p in enumerate(e) if p}

    def denominators(self) -> set[int]:
        return {c.denominator for c in self.terms.values() if isinstance(c, Fraction)}

    # substitutions
    def substitute(self, images: Sequence, n: int | None = None) -> "Polynomial":
        """Send variable k to images[k] = (target, sign), or None for zero."""
        m = self.n if n is None else n
        return Polynomial(K.substitute(self.terms, list(images), 2 * m), m, True)

    def act(self, w) -> "Polynomial":
        """Left action of a signed permutation on X: x_i -> x_{w(i)}."""
        n = self.n
        images = []
        for i in range(n):
            v = w.entries[i] if i < len(w.entries) else i + 1
            images.append((abs(v) - 1, 1 if v > 0 else -1))
        images += [(k, 1) for k in range(n, 2 * n)]
        return self.substitute(images)

    def specialize(self, zero: Iterable[str] = (), negate: Iterable[str] = ()) -> "Polynomial":
        n = self.n
        images = [(k, 1) for k in range(2 * n)]
        for name in negate:
            k = var_index(name, n)
            images[k] = (k, -1)
        for name in zero:
            images[var_index(name, n)] = None
        return self.substitute(images)

    def set_y_zero(self) -> "Polynomial":
        return self.substitute([(k, 1) for k in range(self.n)] + [None] * self.n)

    def swap_alphabets(self) -> "Polynomial":
        """Exchange X and Y: f(X, Y) -> f(Y, X)."""
        n = self.n
        return self.substitute([(n + k, 1) for k in range(n)] + [(k, 1) for k in range(n)])

    def restrict(self, m: int) -> "Polynomial":
        """Set x_i, y_i = 0 for i > m and view the result at rank m."""
        n = self.n
        images = [(i, 1) if i < m else None for i in range(n)]
        images += [(m + i, 1) if i < m else None for i in range(n)]
        return self.substitute(images, m)

    def extend(self, m: int) -> "Polynomial":
        """View the polynomial at a larger rank m."""
        n = self.n
        images = [(i, 1) for i in range(n)] + [(m + i, 1) for i in range(n)]
        return self.substitute(images, m)


def to_text(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    n = f.n
    for e, c in f.sorted_terms():
        mono = "*".join(
            var_name(k, n) + (f"^{p}" if p > 1 else "") for k, p in enumerate(e) if p
        )
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


@dataclass(frozen=True)
class Alphabet:
    """The slice (letter_{start+1}, ..., letter_stop) of X or Y."""

    letter: str
    stop: int
    start: int = 0

    def indices(self, n: int) -> list[int]:
        if self.stop > n:
            raise ValueError(f"alphabet {self} exceeds rank {n}")
        off = 0 if self.letter == "x" else n
        return [off + i for i in range(self.start, self.stop)]


def X(k: int, start: int = 0) -> Alphabet:
    return Alphabet("x", k, start)


def Y(k: int, start: int = 0) -> Alphabet:
    return Alphabet("y", k, start)


def elementary(k: int, alphabet: Alphabet, n: int) -> Polynomial:
    idx = alphabet.indices(n)
    if k < 0 or k > len(idx):
        return Polynomial.zero(n)
    terms = {}
    for sub in combinations(idx, k):
        e = [0] * (2 * n)
        for s in sub:
            e[s] = 1
        terms[tuple(e)] = 1
    return Polynomial(terms, n, True)


def complete(k: int, alphabet: Alphabet, n: int) -> Polynomial:
    idx = alphabet.indices(n)
    if k < 0 or (k > 0 and not idx):
        return Polynomial.zero(n)
    terms = {}
    for sub in combinations_with_replacement(idx, k):
        e = [0] * (2 * n)
        for s in sub:
            e[s] += 1
        terms[tuple(e)] = 1
    return Polynomial(terms, n, True)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g, raising NotDivisible when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = f.n
    lead_e, lead_c = g.sorted_terms()[0]
    q = {}
    r = f
    while not r.is_zero():
        e, c = r.sorted_terms()[0]
        d = tuple(a - b for a, b in zip(e, lead_e))
        if min(d) < 0:
            raise NotDivisible(f"{g} does not divide {f}")
        t = _norm(Fraction(c) / lead_c)
        q[d] = t
        r = r - Polynomial({d: t}, n, True) * g
    return Polynomial(q, n)


def _cofactor_det(m):
    k = len(m)
    if k == 0:
        return 1
    if k == 1:
        return m[0][0]
    total = 0
    for j in range(k):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(m):
    a = [list(row) for row in m]
    k = len(a)
    sign = 1
    prev = 1
    for p in range(k - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, k) if a[r][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                num = a[i][j] * a[p][p] - a[i][p] * a[p][j]
                a[i][j] = _divide(num, prev)
        prev = a[p][p]
    return a[k - 1][k - 1] * sign


def _divide(num, den):
    if isinstance(den, Polynomial):
        if isinstance(num, Polynomial):
            return exact_divide(num, den)
        return exact_divide(Polynomial.const(num, den.n), den)
    if isinstance(num, Polynomial):
        return num.scale(Fraction(1, 1) / den)
    return _norm(Fraction(num) / den)


def determinant(matrix: Sequence[Sequence], method: str = "auto"):
    """Determinant over the polynomial ring.

    Cofactor expansion up to 4x4, fraction-free elimination above that.
    """
    m = [list(r) for r in matrix]
    if any(len(r) != len(m) for r in m):
        raise ValueError("matrix is not square")
    if method == "cofactor" or (method == "auto" and len(m) <= 4):
        return _cofactor_det(m)
    return _bareiss_det(m) if m else 1


def leibniz_det(matrix: Sequence[Sequence]):
    """Determinant as a signed sum over permutations (slow reference)."""
    k = len(matrix)
    total = 0
    for p in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if p[i] > p[j])
        term = 1
        for i in range(k):
            term = term * matrix[i][p[i]]
        total = total - term if inv % 2 else total + term
    return total


def pfaffian(matrix: Sequence[Sequence]):
    """Pfaffian of a skew-symmetric matrix by expansion along the first row."""
    k = len(matrix)
    if k % 2:
        return 0
    if k == 0:
        return 1
    total = 0
    rest = list(range(1, k))
    for pos, j in enumerate(rest):
        if matrix[0][j] == 0:
            continue
        keep = [r for r in rest if r != j]
        sub = [[matrix[a][b] for b in keep] for a in keep]
        term = matrix[0][j] * pfaffian(sub)
        total = total - term if pos % 2 else total + term
    return total


class _Parser:
    _tok = re.compile(r"\s*(?:(\d+)|([xy]_?\d+)|(.))")

    def __init__(self, text: str, n: int):
        self.n = n
        self.toks = []
        for num, name, op in self._tok.findall(text.strip()):
            if num:
                self.toks.append(("num", int(num)))
            elif name:
                self.toks.append(("var", name))
            elif op.strip():
                self.toks.append(("op", op))
        self.pos = 0

    def _peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def _take(self):
        t = self._peek()
        self.pos += 1
        return t

    def parse(self) -> Polynomial:
        out = self._sum()
        if self.pos != len(self.toks):
            raise ValueError(f"unexpected token {self._peek()[1]!r}")
        return out

    def _sum(self):
        sign = 1
        if self._peek() == ("op", "-"):
            self._take()
            sign = -1
        out = self._product() * sign
        while self._peek() in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            rhs = self._product()
            out = out + rhs if op == "+" else out - rhs
        return out

    def _product(self):
        out = self._power()
        while True:
            t = self._peek()
            if t == ("op", "*"):
                self._take()
                out = out * self._power()
            elif t == ("op", "/"):
                self._take()
                den = self._power()
                if den.degree() != 0:
                    raise ValueError("can only divide by constants")
                out = out.scale(Fraction(1) / den.constant_term())
            elif t[0] in ("num", "var") or t == ("op", "("):
                out = out * self._power()
            else:
                return out

    def _power(self):
        base = self._atom()
        if self._peek() == ("op", "^"):
            self._take()
            kind, val = self._take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            base = base ** val
        return base

    def _atom(self):
        kind, val = self._take()
        if kind == "num":
            return Polynomial.const(val, self.n)
        if kind == "var":
            return Polynomial.gen(var_index(val, self.n), self.n)
        if (kind, val) == ("op", "("):
            inner = self._sum()
            if self._take() != ("op", ")"):
                raise ValueError("missing )")
            return inner
        if (kind, val) == ("op", "-"):
            return -self._power()
        raise ValueError(f"unexpected token {val!r}")
