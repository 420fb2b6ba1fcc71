"""Brute-force cross-checks that share no code path with the log/exp route.

:func:`brute_force_genus` multiplies ``n`` explicit copies of a series in
distinct variables, keeps the total-degree-``n`` part, and rewrites that
symmetric polynomial in elementary symmetric functions with the classical
leading-term reduction.  It is exponential in ``n``; keep ``n <= 5``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .kernel import (ONE, ZERO, ChernPolynomial, TruncatedSeries, YPoly, partition,
                     partitions_of)


def _mul(a: dict, b: dict, max_degree: int) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if da + sum(eb) > max_degree:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, ZERO) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _elementary(k: int, n: int) -> dict:
    out = {}
    for idx in combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        out[tuple(e)] = ONE
    return out


def expand_product(factor: TruncatedSeries, n: int) -> dict:
    """Degree-``n`` part of ``prod_{i<n} factor(x_i)`` as ``{exponents: YPoly}``."""
    poly = {(0,) * n: ONE}
    for i in range(n):
        single = {}
        for k in range(min(factor.order, n + 1)):
            if factor[k]:
                e = [0] * n
                e[i] = k
                single[tuple(e)] = factor[k]
        poly = _mul(poly, single, n)
    return {e: c for e, c in poly.items() if sum(e) == n}


def symmetric_to_elementary(poly: dict, n: int) -> ChernPolynomial:
    """Rewrite a homogeneous symmetric polynomial in ``n`` variables."""
    poly = dict(poly)
    e_polys = [None] + [_elementary(k, n) for k in range(1, n + 1)]
    terms: dict = {}
    degree = None
    while poly:
        lead = max(poly)
        coef = poly[lead]
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise ValueError("polynomial is not symmetric")
        degree = sum(lead)
        # lead = (a_1 >= ... >= a_n): e_1^{a1-a2} e_2^{a2-a3} ... e_n^{an}
        mults = [lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n)]
        lam = partition(*[k + 1 for k, m in enumerate(mults) for _ in range(m)])
        terms[lam] = terms.get(lam, ZERO) + coef
        prod = {(0,) * n: coef}
        for k, m in enumerate(mults, start=1):
            for _ in range(m):
                prod = _mul(prod, e_polys[k], degree)
        for e, c in prod.items():
            s = poly.get(e, ZERO) - c
            if s:
                poly[e] = s
            else:
                poly.pop(e, None)
    return ChernPolynomial(terms, grade=n if degree is None else degree)


def brute_force_genus(factor: TruncatedSeries, n: int) -> ChernPolynomial:
    """Independent counterpart of :func:`chiy.kernel.genus_expand`."""
    if n == 0:
        return ChernPolynomial({(): ONE}, grade=0)  # empty product
    return symmetric_to_elementary(expand_product(factor, n), n).with_grade(n)


def projective_space_chern_numbers(n: int) -> dict:
    """Chern numbers of complex projective ``n``-space.

    Expands ``(1 + h)^{n+1}`` term by term, reads ``c_k`` as the coefficient
    of ``h^k``, and integrates monomials using ``h^n = 1``.
    """
    total = [Fraction(1)]
    for _ in range(n + 1):
        nxt = [Fraction(0)] * (len(total) + 1)
        for k, c in enumerate(total):
            nxt[k] += c
            nxt[k + 1] += c
        total = nxt
    total = total[: n + 1]  # h^{n+1} = 0

    out = {}
    for lam in partitions_of(n):
        v = Fraction(1)
        for part in lam:
            v *= total[part]
        out[lam] = int(v)
    return out


def power_sum_values(xs, k: int) -> Fraction:
    return sum((Fraction(x) ** k for x in xs), Fraction(0))


def elementary_values(xs) -> dict:
    """``{(k,): e_k(xs)}`` for ``k = 1..len(xs)``, computed by subset sums."""
    out = {}
    for k in range(1, len(xs) + 1):
        total = Fraction(0)
        for idx in combinations(range(len(xs)), k):
            v = Fraction(1)
            for i in idx:
                v *= Fraction(xs[i])
            total += v
        out[(k,)] = total
    return out


def evaluate_at_roots(poly: ChernPolynomial, xs) -> YPoly:
    """Evaluate a Chern polynomial where ``c_k = e_k(xs)``."""
    e = elementary_values(xs)
    out = ZERO
    for lam, c in poly.items():
        v = Fraction(1)
        for part in lam:
            v *= e.get((part,), Fraction(0))
        out = out + c * v
    return out
