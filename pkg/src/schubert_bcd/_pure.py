"""Pure-Python sparse polynomial kernels.

A term map is a dict from exponent tuples to int or Fraction coefficients.
Zero coefficients are never stored and integral Fractions are stored as int,
so equal polynomials always have equal term maps.

The compiled module ``_ckernels`` exports the same functions with the same
signatures; ``_backend`` picks one at import.
"""
from fractions import Fraction
from operator import add as _add

TRANSPOSITION = 0
ZERO_C = 1
ZERO_B = 2
BOX = 3


def _clean(out):
    res = {}
    for e, c in out.items():
        if c:
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            res[e] = c
    return res


def mul(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    items = list(b.items())
    for ea, ca in a.items():
        for eb, cb in items:
            e = tuple(map(_add, ea, eb))
            out[e] = get(e, 0) + ca * cb
    return _clean(out)


def lincomb(a, b, scale):
    """Return a + scale*b."""
    out = dict(a)
    get = out.get
    for e, c in b.items():
        out[e] = get(e, 0) + scale * c
    return _clean(out)


def divdiff(f, kind, i):
    """Apply one divided difference monomial by monomial.

    ``i`` is the 0-based position of the first variable touched.  For the
    transposition kind the pair is (i, i+1); the box kind always uses
    positions 0 and 1.
    """
    out = {}
    get = out.get
    if kind == ZERO_C or kind == ZERO_B:
        mult = 1 if kind == ZERO_C else 2
        for e, c in f.items():
            a = e[i]
            if a & 1:
                t = e[:i] + (a - 1,) + e[i + 1:]
                out[t] = get(t, 0) + mult * c
        return _clean(out)
    for e, c in f.items():
        a = e[i]
        b = e[i + 1]
        if a == b:
            continue
        if a > b:
            lo, d, s = b, a - b, c
        else:
            lo, d, s = a, b - a, -c
        head = e[:i]
        tail = e[i + 2:]
        if kind == BOX:
            # x2 -> -x2 turns the box operator into the ordinary one
            for j in range(d):
                q = lo + j
                t = head + (lo + d - 1 - j, q) + tail
                out[t] = get(t, 0) + (s if (b + q) % 2 == 0 else -s)
        else:
            for j in range(d):
                t = head + (lo + d - 1 - j, lo + j) + tail
                out[t] = get(t, 0) + s
    return _clean(out)


def substitute(f, images, width):
    """Send variable k to ``images[k]``, a (target, sign) pair or None for 0."""
    out = {}
    get = out.get
    for e, c in f.items():
        new = [0] * width
        neg = False
        for k, p in enumerate(e):
            if p:
                img = images[k]
                if img is None:
                    break
                new[img[0]] += p
                if img[1] < 0 and p & 1:
                    neg = not neg
        else:
            t = tuple(new)
            out[t] = get(t, 0) + (-c if neg else c)
    return _clean(out)
