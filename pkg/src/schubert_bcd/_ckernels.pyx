# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pure``.

Exponents are unpacked into C int buffers so that the inner loops only touch
Python objects for the coefficients and the final dict keys.
"""
from fractions import Fraction

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc

DEF MAXV = 64

TRANSPOSITION = 0
ZERO_C = 1
ZERO_B = 2
BOX = 3


cdef inline tuple _mk(int* buf, Py_ssize_t n):
    cdef tuple t = PyTuple_New(n)
    cdef Py_ssize_t k
    cdef object v
    for k in range(n):
        v = buf[k]
        Py_INCREF(v)
        PyTuple_SET_ITEM(t, k, v)
    return t


cdef inline void _load(tuple e, int* buf, Py_ssize_t n):
    cdef Py_ssize_t k
    for k in range(n):
        buf[k] = <int>e[k]


cdef dict _clean(dict out):
    cdef dict res = {}
    for e, c in out.items():
        if c:
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            res[e] = c
    return res


def mul(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return {}
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t nv = len(next(iter(b)))
    if nv > MAXV:
        raise ValueError("too many variables")
    cdef int* bexp = <int*>malloc(nb * nv * sizeof(int))
    cdef int ea[MAXV]
    cdef int buf[MAXV]
    cdef Py_ssize_t j, k
    cdef list bcoef = []
    cdef dict out = {}
    cdef tuple t
    try:
        j = 0
        for eb, cb in b.items():
            _load(eb, bexp + j * nv, nv)
            bcoef.append(cb)
            j += 1
        for e, ca in a.items():
            _load(e, ea, nv)
            for j in range(nb):
                for k in range(nv):
                    buf[k] = ea[k] + bexp[j * nv + k]
                t = _mk(buf, nv)
                c = out.get(t)
                if c is None:
                    out[t] = ca * bcoef[j]
                else:
                    out[t] = c + ca * bcoef[j]
    finally:
        free(bexp)
    return _clean(out)


def lincomb(dict a, dict b, scale):
    cdef dict out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + scale * c
    return _clean(out)


def divdiff(dict f, int kind, int i):
    cdef dict out = {}
    cdef int buf[MAXV]
    cdef Py_ssize_t nv
    cdef int a, b, lo, d, j, q
    cdef tuple t
    if not f:
        return {}
    nv = len(next(iter(f)))
    if kind == ZERO_C or kind == ZERO_B:
        mult = 1 if kind == ZERO_C else 2
        for e, c in f.items():
            a = e[i]
            if a & 1:
                _load(e, buf, nv)
                buf[i] = a - 1
                t = _mk(buf, nv)
                out[t] = out.get(t, 0) + mult * c
        return _clean(out)
    for e, c in f.items():
        _load(e, buf, nv)
        a = buf[i]
        b = buf[i + 1]
        if a == b:
            continue
        if a > b:
            lo = b
            d = a - b
            s = c
        else:
            lo = a
            d = b - a
            s = -c
        for j in range(d):
            q = lo + j
            buf[i] = lo + d - 1 - j
            buf[i + 1] = q
            t = _mk(buf, nv)
            if kind == BOX and (b + q) % 2:
                out[t] = out.get(t, 0) - s
            else:
                out[t] = out.get(t, 0) + s
    return _clean(out)


def substitute(dict f, list images, int width):
    cdef dict out = {}
    cdef int buf[MAXV]
    cdef int tgt[MAXV]
    cdef int sgn[MAXV]
    cdef Py_ssize_t k, nv
    cdef int p
    cdef bint neg, dead
    if not f:
        return {}
    nv = len(images)
    for k in range(nv):
        img = images[k]
        if img is None:
            tgt[k] = -1
            sgn[k] = 1
        else:
            tgt[k] = img[0]
            sgn[k] = img[1]
    for e, c in f.items():
        for k in range(width):
            buf[k] = 0
        neg = False
        dead = False
        for k in range(nv):
            p = e[k]
            if p:
                if tgt[k] < 0:
                    dead = True
                    break
                buf[tgt[k]] += p
                if sgn[k] < 0 and p & 1:
                    neg = not neg
        if dead:
            continue
        t = _mk(buf, width)
        out[t] = out.get(t, 0) + (-c if neg else c)
    return _clean(out)
