"""Q-tilde and P-tilde polynomials and the reproducing kernels built from them.

For an alphabet Z, Q~_i(Z) = e_i(Z), the two-part functions are

    Q~_{i,j} = Q~_i Q~_j + 2 sum_{k=1}^{j} (-1)^k Q~_{i+k} Q~_{j-k}

and Q~_lam is the Pfaffian of [Q~_{lam_a, lam_b}], after padding lam with a
zero part when its length is odd.  P~_lam = 2^{-l(lam)} Q~_lam.

Set SCHUBERT_CACHE_DIR to keep computed full kernels as JSON between runs.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .formats import from_json, to_json
from .partitions import dual, strict_partitions
from .polynomial import Alphabet, Polynomial, X, Y, elementary, pfaffian


@lru_cache(maxsize=None)
def qtilde_pair(i: int, j: int, alphabet: Alphabet, n: int) -> Polynomial:
    e = lambda k: elementary(k, alphabet, n)
    out = e(i) * e(j)
    for k in range(1, j + 1):
        term = e(i + k) * e(j - k)
        out = out + (term * 2 if k % 2 == 0 else term * -2)
    return out


@lru_cache(maxsize=None)
def qtilde(lam: tuple[int, ...], alphabet: Alphabet, n: int) -> Polynomial:
    lam = tuple(p for p in lam if p)
    if not lam:
        return Polynomial.const(1, n)
    if len(lam) % 2:
        lam = lam + (0,)
    k = len(lam)
    zero = Polynomial.zero(n)
    m = [[zero] * k for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            q = qtilde_pair(lam[a], lam[b], alphabet, n)
            m[a][b] = q
            m[b][a] = -q
    out = pfaffian(m)
    return out if isinstance(out, Polynomial) else Polynomial.const(out, n)


def ptilde(lam: tuple[int, ...], alphabet: Alphabet, n: int) -> Polynomial:
    l = sum(1 for p in lam if p)
    return qtilde(tuple(lam), alphabet, n).scale(Fraction(1, 2 ** l))


def flip_last_y(f: Polynomial) -> Polynomial:
    """Replace y_n by -y_n."""
    return f.specialize(negate=[f"y{f.n}"])


@lru_cache(maxsize=None)
def delta(n: int) -> Polynomial:
    """prod_{i+j <= n} (x_i - y_j)."""
    out = Polynomial.const(1, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            out = out * (Polynomial.x(i, n) - Polynomial.y(j, n))
    return out


@lru_cache(maxsize=None)
def reproducing_kernel(family: str, n: int) -> Polynomial:
    """Q~(X,Y) for C, P~_n(X,Y) for B and P~_{n-1}(X,Y) for D."""
    if family == "C":
        k, fn = n, qtilde
    elif family == "B":
        k, fn = n, ptilde
    elif family == "D":
        k, fn = n - 1, ptilde
    else:
        raise ValueError(f"no reproducing kernel for type {family}")
    out = Polynomial.zero(n)
    for lam in strict_partitions(k):
        out = out + fn(lam, X(n), n) * fn(dual(lam, k), Y(n), n)
    return out


def _cache_path(family: str, n: int) -> Path | None:
    root = os.environ.get("SCHUBERT_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"kernel_{family}{n}.json"


@lru_cache(maxsize=None)
def full_kernel(family: str, n: int) -> Polynomial:
    """Delta times the reproducing kernel (Delta alone for type A)."""
    path = _cache_path(family, n)
    if path is not None and path.exists():
        f = from_json(path.read_text())
        if f.n == n:
            return f
    if family == "A":
        f = delta(n)
    else:
        f = delta(n) * reproducing_kernel(family, n)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(to_json(f, family, "kernel"))
    return f
