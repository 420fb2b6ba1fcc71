"""The chi_y-genus as a polynomial in Chern numbers.

``hrr_genus_formula(n)`` expands the characteristic series
``x (1 + y e^{-x}) / (1 - e^{-x})`` over ``n`` Chern roots.  Re-expanding
its coefficients around ``y = -1`` gives the Taylor coefficients ``a_i``;
a Stirling transform turns those into the moments ``h(p^m)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

from .kernel import (
    ChernPolynomial,
    Partition,
    YPoly,
    chi_y_factor,
    genus_expand,
    partition,
    stirling2,
    weight,
)


@dataclass(frozen=True)
class ChernNumbers:
    """Values ``c_I[M]`` for partitions ``I`` of ``dimension``.

    Missing partitions read as zero.  Values are normally integers; exact
    rationals are accepted for hypothetical data.
    """

    dimension: int
    values: Mapping[Partition, int | Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.dimension < 0:
            raise ValueError("dimension must be nonnegative")
        canon = {}
        for lam, v in dict(self.values).items():
            lam = partition(*lam)
            if weight(lam) != self.dimension:
                raise ValueError(
                    f"Chern monomial {lam} has weight {weight(lam)}, expected {self.dimension}")
            v = Fraction(v)
            canon[lam] = int(v) if v.denominator == 1 else v
        object.__setattr__(self, "values", canon)

    def __getitem__(self, lam) -> int | Fraction:
        return self.values.get(partition(*lam), 0)

    def get(self, lam, default=0):
        return self.values.get(partition(*lam), default)


def chern_monomial(*classes: int) -> Partition:
    """Partition for ``c_{k1} c_{k2} ...``; ``c_0 = 1`` factors are dropped.

    >>> chern_monomial(1, 3)
    (3, 1)
    """
    return partition(*classes)


@lru_cache(maxsize=None)
def hrr_genus_formula(n: int) -> ChernPolynomial:
    """chi_y of an ``n``-dimensional almost-complex manifold in Chern numbers."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return genus_expand(chi_y_factor(n + 1), n)


def evaluate_genus(formula: ChernPolynomial, chern: ChernNumbers) -> YPoly:
    if formula.grade is not None and formula.grade != chern.dimension:
        raise ValueError(
            f"formula has grade {formula.grade} but Chern numbers have dimension "
            f"{chern.dimension}")
    return formula.evaluate(chern.values)


@dataclass(frozen=True)
class TaylorCoefficients:
    """``a_0..a_k`` with ``chi_y = sum_i a_i (1 + y)^i``."""

    dimension: int
    coefficients: tuple

    def __getitem__(self, i) -> ChernPolynomial:
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


@dataclass(frozen=True)
class PowerMoments:
    """``h(p^0)..h(p^k)`` as grade-``n`` Chern polynomials."""

    dimension: int
    moments: tuple

    def __getitem__(self, i) -> ChernPolynomial:
        return self.moments[i]

    def __len__(self):
        return len(self.moments)

    def __iter__(self):
        return iter(self.moments)


def _check_depth(n: int, depth: int | None) -> int:
    if depth is None:
        return n
    if not 0 <= depth <= n:
        raise ValueError(f"depth must lie in 0..{n}, got {depth}")
    return depth


@lru_cache(maxsize=None)
def _taylor_all(n: int) -> tuple:
    formula = hrr_genus_formula(n)
    shifted = {lam: c.taylor_at(-1) for lam, c in formula.items()}
    out = []
    for i in range(n + 1):
        terms = {lam: t[i] for lam, t in shifted.items() if i < len(t) and t[i]}
        out.append(ChernPolynomial(terms, grade=n))
    return tuple(out)


def taylor_at_minus_one(n: int, depth: int | None = None) -> TaylorCoefficients:
    depth = _check_depth(n, depth)
    return TaylorCoefficients(n, _taylor_all(n)[: depth + 1])


@lru_cache(maxsize=None)
def _moments_all(n: int) -> tuple:
    a = _taylor_all(n)
    out = []
    for m in range(n + 1):
        acc = ChernPolynomial(grade=n)
        for i in range(m + 1):
            s = stirling2(m, i)
            if s:
                acc = acc + a[i].scale(s * factorial(i) * (-1) ** i)
        out.append(acc.with_grade(n))
    return tuple(out)


def chern_power_moments(n: int, depth: int | None = None) -> PowerMoments:
    """``h(p^m) = sum_i S(m, i) i! (-1)^i a_i`` for ``m <= depth``."""
    depth = _check_depth(n, depth)
    return PowerMoments(n, _moments_all(n)[: depth + 1])


def duality_residual(n: int) -> ChernPolynomial:
    """``chi_y - (-y)^n chi_{1/y}``, cleared of negative powers; always zero."""
    formula = hrr_genus_formula(n)
    sign = (-1) ** n
    return formula - formula.map_coefficients(lambda c: c.reflect(n) * sign)


def euler_characteristic(chern: ChernNumbers) -> int | Fraction:
    return chern[(chern.dimension,)]
