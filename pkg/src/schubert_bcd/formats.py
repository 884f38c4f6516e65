"""Text, LaTeX and JSON renderings of polynomials."""
from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce
from math import gcd

from .polynomial import Polynomial, to_text


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def to_record(f: Polynomial, family: str = "", element: str = "") -> dict:
    n = f.n
    terms = []
    for e, c in f.sorted_terms():
        c = Fraction(c)
        terms.append({"c": [c.numerator, c.denominator], "x": list(e[:n]), "y": list(e[n:])})
    return {"family": family, "n": n, "element": element, "terms": terms}


def from_record(rec: dict) -> Polynomial:
    n = int(rec["n"])
    terms = {}
    for t in rec["terms"]:
        if len(t["x"]) != n or len(t["y"]) != n:
            raise ValueError("term does not match the declared rank")
        num, den = t["c"]
        e = tuple(t["x"]) + tuple(t["y"])
        terms[e] = terms.get(e, 0) + Fraction(num, den)
    return Polynomial(terms, n)


def to_json(f: Polynomial, family: str = "", element: str = "") -> str:
    return json.dumps(to_record(f, family, element))


def from_json(text: str) -> Polynomial:
    return from_record(json.loads(text))


def _latex_monomial(e, n) -> str:
    parts = []
    for k, p in enumerate(e):
        if p:
            letter, idx = ("x", k + 1) if k < n else ("y", k - n + 1)
            sub = str(idx) if idx < 10 else f"{{{idx}}}"
            parts.append(f"{letter}_{sub}" + (f"^{{{p}}}" if p > 1 else ""))
    return "".join(parts)


def _latex_sum(f: Polynomial) -> str:
    out = []
    for e, c in f.sorted_terms():
        mono = _latex_monomial(e, f.n)
        neg = c < 0
        a = -c if neg else c
        if isinstance(a, Fraction):
            coef = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
        else:
            coef = "" if (a == 1 and mono) else str(a)
        body = coef + mono
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("-" if neg else "+") + body)
    return "".join(out) or "0"


def to_latex(f: Polynomial) -> str:
    """LaTeX with a common fractional content pulled out front."""
    if f.is_zero():
        return "0"
    den = reduce(_lcm, (Fraction(c).denominator for c in f.terms.values()), 1)
    if den == 1 or len(f.terms) == 1:
        return _latex_sum(f)
    inner = _latex_sum(f.scale(den))
    return f"\\frac{{1}}{{{den}}}({inner})"


__all__ = ["to_text", "to_latex", "to_json", "from_json", "to_record", "from_record"]
