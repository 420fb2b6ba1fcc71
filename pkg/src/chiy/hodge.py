"""Hodge diamonds, Betti vectors and their alternating moments.

Indexing: ``HodgeDiamond.h[p][q]`` is ``h^{p,q}``.  The text/JSON layout is
row ``q``, column ``p`` (``rows[q][p] == h^{p,q}``), so the first printed
row is ``h^{0,0} h^{1,0} ... h^{n,0}``.  For Kaehler diamonds the two
layouts coincide because ``h^{p,q} = h^{q,p}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .kernel import YPoly


class Tier(enum.Enum):
    RAW = "raw"
    KAEHLER = "kaehler"
    MIRROR = "mirror"


@dataclass(frozen=True)
class Violation:
    constraint: str
    witnesses: tuple = ()

    def __str__(self):
        if not self.witnesses:
            return self.constraint
        return f"{self.constraint} at {', '.join(map(str, self.witnesses))}"


@dataclass(frozen=True)
class HodgeDiamond:
    h: tuple  # h[p][q]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.h)
        n1 = len(rows)
        if n1 == 0 or any(len(r) != n1 for r in rows):
            raise ValueError("diamond shape must be (n+1)x(n+1)")
        for r in rows:
            for v in r:
                if isinstance(v, bool) or int(v) != v:
                    raise ValueError(f"Hodge numbers must be integers, got {v!r}")
        object.__setattr__(self, "h", tuple(tuple(int(v) for v in r) for r in rows))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], dimension: int | None = None):
        """Build from row-``q`` layout (``rows[q][p] = h^{p,q}``)."""
        rows = [list(r) for r in rows]
        if dimension is not None and (
                len(rows) != dimension + 1 or any(len(r) != dimension + 1 for r in rows)):
            raise ValueError("diamond shape must be (n+1)x(n+1)")
        n1 = len(rows)
        if n1 == 0 or any(len(r) != n1 for r in rows):
            raise ValueError("diamond shape must be (n+1)x(n+1)")
        return cls(tuple(tuple(rows[q][p] for q in range(n1)) for p in range(n1)))

    @classmethod
    def from_text(cls, text: str) -> "HodgeDiamond":
        rows = [[int(tok) for tok in line.split()]
                for line in text.splitlines() if line.strip()]
        return cls.from_rows(rows)

    @classmethod
    def pure(cls, diagonal: Iterable[int]) -> "HodgeDiamond":
        d = list(diagonal)
        n1 = len(d)
        return cls(tuple(tuple(d[p] if p == q else 0 for q in range(n1)) for p in range(n1)))

    def rows(self) -> list[list[int]]:
        n1 = self.dimension + 1
        return [[self.h[p][q] for p in range(n1)] for q in range(n1)]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows())

    def as_array(self) -> np.ndarray:
        """``h^{p,q}`` as an integer array indexed ``[p, q]``."""
        return np.array(self.h, dtype=object)

    @property
    def dimension(self) -> int:
        return len(self.h) - 1

    def __getitem__(self, pq) -> int:
        p, q = pq
        return self.h[p][q]

    def entries(self):
        n1 = self.dimension + 1
        for p in range(n1):
            for q in range(n1):
                yield p, q, self.h[p][q]

    def __str__(self):
        return self.to_text()


def validate(diamond: HodgeDiamond, tier: Tier | str = Tier.RAW) -> list[Violation]:
    """All violated constraints for ``tier``; an empty list means valid."""
    tier = Tier(tier)
    n = diamond.dimension
    out = []
    negative = [(p, q) for p, q, v in diamond.entries() if v < 0]
    if negative:
        out.append(Violation("nonnegative", tuple(negative)))
    if tier is Tier.RAW:
        return out
    serre = [(p, q) for p, q, v in diamond.entries()
             if (p, q) < (n - p, n - q) and v != diamond[n - p, n - q]]
    if serre:
        out.append(Violation("serre h[p,q]=h[n-p,n-q]", tuple(serre)))
    conj = [(p, q) for p, q, v in diamond.entries() if p < q and v != diamond[q, p]]
    if conj:
        out.append(Violation("conjugation h[p,q]=h[q,p]", tuple(conj)))
    diag = [(p, p) for p in range(n + 1) if diamond[p, p] < 1]
    if diag:
        out.append(Violation("kaehler class h[p,p]>=1", tuple(diag)))
    if tier is Tier.MIRROR:
        if n % 2:
            out.append(Violation("mirror needs even dimension", (n,)))
        mirror = [(p, q) for p, q, v in diamond.entries()
                  if q < n - q and v != diamond[p, n - q]]
        if mirror:
            out.append(Violation("mirror h[p,q]=h[p,n-q]", tuple(mirror)))
    return out


@dataclass(frozen=True)
class BettiVector:
    """``b_0..b_k`` for a closed orientable ``k``-manifold.

    A diamond of complex dimension ``n`` gives ``k = 2n``.
    """

    b: tuple

    def __post_init__(self):
        b = tuple(self.b)
        if not b:
            raise ValueError("Betti vector must be nonempty")
        for v in b:
            if isinstance(v, bool) or int(v) != v or v < 0:
                raise ValueError(f"Betti numbers must be nonnegative integers, got {v!r}")
        object.__setattr__(self, "b", tuple(int(v) for v in b))

    @property
    def top(self) -> int:
        return len(self.b) - 1

    def __getitem__(self, i):
        return self.b[i]

    def __len__(self):
        return len(self.b)

    def __iter__(self):
        return iter(self.b)

    def is_poincare(self) -> bool:
        return self.b == self.b[::-1]

    def euler(self) -> int:
        return sum((-1) ** i * v for i, v in enumerate(self.b))

    def __mul__(self, k: int) -> "BettiVector":
        return BettiVector(tuple(k * v for v in self.b))

    __rmul__ = __mul__


def betti_from_diamond(diamond: HodgeDiamond) -> BettiVector:
    n = diamond.dimension
    b = [0] * (2 * n + 1)
    for p, q, v in diamond.entries():
        b[p + q] += v
    return BettiVector(tuple(b))


def chi_profile(diamond: HodgeDiamond) -> tuple[list[int], YPoly]:
    """``(chi^0..chi^n, chi_y)`` with ``chi^p = sum_q (-1)^q h^{p,q}``."""
    n = diamond.dimension
    chis = [sum((-1) ** q * diamond[p, q] for q in range(n + 1)) for p in range(n + 1)]
    return chis, YPoly(chis)


@dataclass(frozen=True)
class MomentSpec:
    """A polynomial ``x(p, q) = sum coef * p^i q^j`` as ``(i, j, coef)`` terms."""

    terms: tuple

    def __post_init__(self):
        terms = []
        for i, j, c in self.terms:
            if i < 0 or j < 0:
                raise ValueError("moment exponents must be nonnegative")
            terms.append((int(i), int(j), Fraction(c)))
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def monomial(cls, i: int, j: int = 0, coef=1) -> "MomentSpec":
        return cls(((i, j, coef),))

    def __call__(self, p: int, q: int) -> Fraction:
        return sum((c * p ** i * q ** j for i, j, c in self.terms), Fraction(0))


def h_moment(diamond: HodgeDiamond, spec: MomentSpec | tuple) -> Fraction:
    """``sum_{p,q} (-1)^{p+q} h^{p,q} x(p,q)``; a tuple ``(i, j)`` means ``p^i q^j``."""
    if not isinstance(spec, MomentSpec):
        spec = MomentSpec.monomial(*spec)
    return sum((Fraction((-1) ** (p + q) * v) * spec(p, q)
                for p, q, v in diamond.entries() if v), Fraction(0))


def f_moment(betti: BettiVector, i: int) -> Fraction:
    """``sum_p (-1)^p b_p p^i``."""
    if i < 0:
        raise ValueError("moment order must be nonnegative")
    return Fraction(sum((-1) ** p * v * p ** i for p, v in enumerate(betti.b)))


def weighted_betti_sum(betti: BettiVector, i: int) -> int:
    """``sum_p b_p p^i`` (no signs)."""
    return sum(v * p ** i for p, v in enumerate(betti.b))


@dataclass(frozen=True)
class DiamondFlags:
    is_pure: bool
    is_mirror: bool
    is_kaehler_symmetric: bool


def predicates(diamond: HodgeDiamond) -> DiamondFlags:
    n = diamond.dimension
    pure = all(v == 0 for p, q, v in diamond.entries() if p != q)
    mirror = all(v == diamond[p, n - q] for p, q, v in diamond.entries())
    symmetric = all(v == diamond[q, p] and v == diamond[n - p, n - q]
                    for p, q, v in diamond.entries())
    return DiamondFlags(pure, mirror, symmetric)


def poincare_polynomial(betti: BettiVector) -> YPoly:
    return YPoly(betti.b)


def poincare_duality_residual(betti: BettiVector) -> YPoly:
    """``P_y - y^k P_{1/y}``; zero exactly when ``b_i = b_{k-i}``."""
    p = poincare_polynomial(betti)
    return p - p.reflect(betti.top)


def random_kaehler_diamond(rng: np.random.Generator, n: int, pure: bool = False,
                           max_entry: int = 5) -> HodgeDiamond:
    """Seeded Kaehler-valid diamond.

    Starts from a symmetric pure diagonal and, unless ``pure``, adds random
    values on whole symmetry orbits ``{(p,q), (q,p), (n-p,n-q), (n-q,n-p)}``.
    """
    h = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(n // 2 + 1):
        v = int(rng.integers(1, max_entry + 1))
        h[p][p] = h[n - p][n - p] = v
    if not pure:
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                if (p, q) > (n - q, n - p):
                    continue
                v = int(rng.integers(0, max_entry + 1)) if rng.random() < 0.5 else 0
                for a, b in ((p, q), (q, p), (n - p, n - q), (n - q, n - p)):
                    h[a][b] = v
    return HodgeDiamond(tuple(tuple(r) for r in h))


def random_mirror_diamond(rng: np.random.Generator, n: int,
                          max_entry: int = 5) -> HodgeDiamond:
    """Seeded diamond satisfying the Kaehler and mirror symmetries (``n`` even)."""
    if n % 2:
        raise ValueError("mirror diamonds need even dimension")
    h = [[None] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        for q in range(n + 1):
            if h[p][q] is not None:
                continue
            orbit = {(p, q)}
            while True:
                grown = set(orbit)
                for a, b in orbit:
                    grown |= {(b, a), (n - a, n - b), (a, n - b)}
                if grown == orbit:
                    break
                orbit = grown
            on_diagonal = any(a == b for a, b in orbit)
            v = int(rng.integers(1 if on_diagonal else 0, max_entry + 1))
            for a, b in orbit:
                h[a][b] = v
    return HodgeDiamond(tuple(tuple(r) for r in h))
