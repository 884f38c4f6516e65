"""Signed permutations and the Weyl groups S_n, W_n and its even subgroup.

Elements are written in one-line notation with negative integers for barred
entries.  Composition is (u*v)(i) = sign(v(i)) u(|v(i)|), and right
multiplication by a generator acts on positions:

* s_i swaps the entries in positions i and i+1,
* s0 negates the first entry,
* "box" sends (u1, u2, ...) to (-u2, -u1, ...).

>>> W = WeylGroup("C", 2)
>>> SignedPermutation((-1, 2)) * W.generator(1)
SignedPermutation(entries=(2, -1))
>>> W.reduced_word(W.longest())
[0, 1, 0, 1]
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .partitions import dual, strict_partitions

FAMILIES = ("A", "B", "C", "D")

Generator = int | str  # 0, 1, ..., n-1 or "box"


@dataclass(frozen=True, order=True)
class SignedPermutation:
    entries: tuple[int, ...]

    def __post_init__(self):
        vals = sorted(abs(v) for v in self.entries)
        if vals != list(range(1, len(vals) + 1)):
            raise ValueError(f"{self.entries} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        v = self.entries[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return SignedPermutation(tuple(self(v) for v in other.entries))

    def inverse(self) -> "SignedPermutation":
        out = [0] * self.n
        for i, v in enumerate(self.entries, 1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(out))

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.entries) + "]"

    def bars(self) -> int:
        return sum(1 for v in self.entries if v < 0)

    def is_unsigned(self) -> bool:
        return all(v > 0 for v in self.entries)

    def is_identity(self) -> bool:
        return self.entries == tuple(range(1, self.n + 1))

    def embed(self, m: int) -> "SignedPermutation":
        """The natural inclusion into rank m >= n, fixing n+1, ..., m."""
        return SignedPermutation(self.entries + tuple(range(self.n + 1, m + 1)))

    def shift(self) -> "SignedPermutation":
        """1 x w: prepend a fixed point and shift the other values up."""
        return SignedPermutation((1,) + tuple(v + 1 if v > 0 else v - 1 for v in self.entries))

    def restrict(self, m: int) -> "SignedPermutation":
        if any(self.entries[i] != i + 1 for i in range(m, self.n)):
            raise ValueError(f"{self} does not fix {m + 1}..{self.n}")
        return SignedPermutation(self.entries[:m])

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation(tuple(range(1, n + 1)))


def inversions(w: SignedPermutation) -> int:
    e = w.entries
    return sum(1 for i in range(len(e)) for j in range(i + 1, len(e)) if e[i] > e[j])


def negative_sum_pairs(w: SignedPermutation) -> int:
    e = w.entries
    return sum(1 for i in range(len(e)) for j in range(i + 1, len(e)) if e[i] + e[j] < 0)


@dataclass(frozen=True)
class WeylGroup:
    """One of S_n (A), W_n (B or C) or the even-bar subgroup of W_n (D)."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1 or (self.family == "D" and self.n < 2):
            raise ValueError(f"rank {self.n} too small for type {self.family}")

    def generators(self) -> list[Generator]:
        rest = list(range(1, self.n))
        if self.family == "A":
            return rest
        if self.family == "D":
            return ["box"] + rest
        return [0] + rest

    def generator(self, g: Generator) -> SignedPermutation:
        e = list(range(1, self.n + 1))
        if g == "box":
            if self.family != "D":
                raise ValueError("box generator only exists in type D")
            e[0], e[1] = -2, -1
        elif g == 0:
            if self.family not in ("B", "C"):
                raise ValueError("s0 only exists in types B and C")
            e[0] = -1
        elif isinstance(g, int) and 1 <= g < self.n:
            e[g - 1], e[g] = e[g], e[g - 1]
        else:
            raise ValueError(f"no generator {g!r} in rank {self.n}")
        return SignedPermutation(tuple(e))

    def contains(self, w: SignedPermutation) -> bool:
        if w.n != self.n:
            return False
        if self.family == "A":
            return w.is_unsigned()
        if self.family == "D":
            return w.bars() % 2 == 0
        return True

    def check(self, w: SignedPermutation) -> SignedPermutation:
        if self.contains(w):
            return w
        if w.n != self.n:
            why = f"has rank {w.n}, expected {self.n}"
        elif self.family == "A":
            why = "has negative entries"
        else:
            why = "has an odd number of negative entries"
        raise ValueError(f"{w} is not in {self}: it {why}")

    def length(self, w: SignedPermutation) -> int:
        inv = inversions(w)
        if self.family == "A":
            return inv
        nsp = negative_sum_pairs(w)
        if self.family == "D":
            return inv + nsp
        return inv + nsp + w.bars()

    def elements(self) -> list[SignedPermutation]:
        return _elements(self.family, self.n)

    def identity(self) -> SignedPermutation:
        return SignedPermutation.identity(self.n)

    def longest(self) -> SignedPermutation:
        n = self.n
        if self.family == "A":
            return SignedPermutation(tuple(range(n, 0, -1)))
        if self.family == "D" and n % 2:
            return SignedPermutation((1,) + tuple(-i for i in range(2, n + 1)))
        return SignedPermutation(tuple(-i for i in range(1, n + 1)))

    def max_length(self) -> int:
        n = self.n
        return {"A": n * (n - 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[self.family]

    def right_descents(self, w: SignedPermutation) -> list[Generator]:
        lw = self.length(w)
        return [g for g in self.generators() if self.length(w * self.generator(g)) < lw]

    def reduced_word(self, w: SignedPermutation) -> list[Generator]:
        """Greedy reduced word: strip the smallest right descent until w = 1.

        The result a1..ar satisfies w = s_{a1} ... s_{ar}.
        """
        self.check(w)
        word = []
        while not w.is_identity():
            g = self.right_descents(w)[0]
            word.append(g)
            w = w * self.generator(g)
        word.reverse()
        return word

    def reduced_words(self, w: SignedPermutation) -> list[list[Generator]]:
        """All reduced words of w (exponential; meant for small ranks)."""
        self.check(w)
        if w.is_identity():
            return [[]]
        out = []
        for g in self.right_descents(w):
            for word in self.reduced_words(w * self.generator(g)):
                out.append(word + [g])
        return out

    def from_word(self, word) -> SignedPermutation:
        w = self.identity()
        for g in word:
            w = w * self.generator(g)
        return w

    def is_reduced(self, word) -> bool:
        return self.length(self.from_word(word)) == len(word)

    def star(self, w: SignedPermutation) -> SignedPermutation:
        """w* = v0 w v0 with v0 the longest element of S_n."""
        v0 = WeylGroup("A", self.n).longest()
        return v0 * w * v0

    def weak_leq(self, u: SignedPermutation, v: SignedPermutation) -> bool:
        """Right weak order: v = u s_{a1}...s_{ar} with r = l(v) - l(u)."""
        return self.length(u.inverse() * v) == self.length(v) - self.length(u)

    def __str__(self):
        names = {"A": "S", "B": "W", "C": "W", "D": "W~"}
        return f"{names[self.family]}_{self.n}"


@lru_cache(maxsize=None)
def _elements(family: str, n: int) -> list[SignedPermutation]:
    W = WeylGroup(family, n)
    out = []
    for p in permutations(range(1, n + 1)):
        if family == "A":
            out.append(SignedPermutation(p))
            continue
        for signs in product((1, -1), repeat=n):
            w = SignedPermutation(tuple(s * v for s, v in zip(signs, p)))
            if W.contains(w):
                out.append(w)
    out.sort(key=lambda w: (W.length(w), w.entries))
    return out


def parse_element(text: str, family: str, n: int) -> SignedPermutation:
    """Parse "[-2,1]", "-2 1", "box", "s0", "s1", "id", "w0"."""
    W = WeylGroup(family, n)
    t = text.strip().lower()
    if t in ("id", "e"):
        return W.identity()
    if t == "w0":
        return W.longest()
    if t in ("box", "sbox"):
        return W.generator("box")
    m = re.fullmatch(r"s_?(\d+)", t)
    if m:
        return W.generator(int(m.group(1)))
    vals = [int(v) for v in re.findall(r"-?\d+", t)]
    if not vals or re.sub(r"[\s\[\]\(\),\-\d]", "", t):
        raise ValueError(f"cannot parse group element {text!r}")
    w = SignedPermutation(tuple(vals))
    return W.check(w)


def embed_c(w: SignedPermutation) -> SignedPermutation:
    """The embedding W_n -> S_2n used for type C."""
    n = w.n
    head = []
    for i in range(1, n + 1):
        v = w.entries[n - i]
        head.append(n + 1 - v if v > 0 else n + abs(v))
    tail = [2 * n + 1 - head[n - 1 - j] for j in range(n)]
    return SignedPermutation(tuple(head + tail))


def embed_b(w: SignedPermutation) -> SignedPermutation:
    """The embedding W_n -> S_{2n+1} used for type B."""
    n = w.n
    head = []
    for i in range(1, n + 1):
        v = w.entries[n - i]
        head.append(n + 1 - v if v > 0 else n + 1 + abs(v))
    tail = [2 * n + 2 - head[n - 1 - j] for j in range(n)]
    return SignedPermutation(tuple(head + [n + 1] + tail))


def embed_d(w: SignedPermutation) -> SignedPermutation:
    """The type D embedding: embed_c followed by s_n unless -1 is an entry."""
    n = w.n
    sigma = embed_c(w)
    if -1 in w.entries:
        return sigma
    sn = WeylGroup("A", 2 * n).generator(n)
    return sn * sigma


def even_sign_changes(n: int) -> list[SignedPermutation]:
    """The subgroup H of sign changes with an even number of bars."""
    out = []
    for signs in product((1, -1), repeat=n):
        if signs.count(-1) % 2 == 0:
            out.append(SignedPermutation(tuple(s * (i + 1) for i, s in enumerate(signs))))
    return out


def l_set(w: SignedPermutation) -> list[SignedPermutation]:
    """Elements of wH of the same type-D length as w, for w in S_n."""
    D = WeylGroup("D", w.n)
    lw = D.length(w)
    return sorted(v for v in (w * h for h in even_sign_changes(w.n)) if D.length(v) == lw)


def left_to_right_minima(w: SignedPermutation) -> int:
    """Number of j >= 2 with w(i) > w(j) for every i < j."""
    e = w.entries
    return sum(1 for j in range(1, len(e)) if all(e[i] > e[j] for i in range(j)))


def max_grassmannian(family: str, lam: tuple[int, ...], n: int) -> SignedPermutation:
    """The maximal Grassmannian element attached to a strict partition."""
    lam = tuple(lam)
    if family in ("B", "C"):
        if lam not in strict_partitions(n):
            raise ValueError(f"{lam} is not a strict partition in rank {n}")
        rest = sorted(dual(lam, n))
        return SignedPermutation(tuple(-p for p in lam) + tuple(rest))
    if family == "D":
        if lam not in strict_partitions(n - 1):
            raise ValueError(f"{lam} is not a strict partition in rank {n - 1}")
        shifted = tuple(p + 1 for p in lam)
        one = -1 if len(lam) % 2 else 1
        mu = sorted(dual(shifted + (1,), n))
        return SignedPermutation(tuple(-p for p in shifted) + (one,) + tuple(mu))
    raise ValueError(f"no maximal Grassmannian elements in type {family}")


def grassmannian_perm(lam: tuple[int, ...], r: int, n: int) -> SignedPermutation:
    """The Grassmannian permutation with descent at r whose shape is lam."""
    lam = tuple(lam) + (0,) * (r - len(lam))
    if len(lam) > r:
        raise ValueError("partition longer than r")
    head = [lam[r - i] + i for i in range(1, r + 1)]
    if head and head[-1] > n:
        raise ValueError(f"rank {n} too small for {lam} with r={r}")
    tail = [v for v in range(1, n + 1) if v not in head]
    return SignedPermutation(tuple(head + tail))
