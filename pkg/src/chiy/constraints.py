"""Exact Betti/Hodge/Chern constraints for Kaehler and hyperKaehler data.

Every checker returns an exact :class:`~fractions.Fraction`; comparisons
against supplied Chern numbers are wrapped in :class:`ConstraintReport`
records whose status is decided by exact comparison only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .genus import ChernNumbers, chern_monomial, chern_power_moments, evaluate_genus
from .hodge import BettiVector, HodgeDiamond, MomentSpec, h_moment, predicates


class NotApplicable(ValueError):
    """Input falls outside a constraint's hypotheses (e.g. odd dimension)."""


class Status(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    EQUALITY = "equality-attained"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ConstraintReport:
    id: str
    status: Status
    left: Fraction | None = None
    right: Fraction | None = None
    detail: str = ""
    witnesses: dict = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.status is Status.VIOLATED

    def to_json(self) -> dict:
        out = {"id": self.id, "status": self.status.value,
               "left": _q(self.left), "right": _q(self.right)}
        if self.detail:
            out["detail"] = self.detail
        if self.witnesses:
            out["witnesses"] = self.witnesses
        return out

    def __str__(self):
        rel = {Status.SATISFIED: "ok", Status.VIOLATED: "VIOLATED",
               Status.EQUALITY: "equality", Status.NOT_APPLICABLE: "n/a"}[self.status]
        vals = ""
        if self.left is not None or self.right is not None:
            vals = f"  left={_q(self.left)} right={_q(self.right)}"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"[{rel:>8}] {self.id}{vals}{tail}"


def _q(v):
    return None if v is None else str(Fraction(v))


def _check_length(betti: BettiVector, n: int):
    if len(betti) != 2 * n + 1:
        raise ValueError(f"Betti vector of length {len(betti)} does not match n={n}")


def _sum_by_parity(betti, even_term, odd_term) -> Fraction:
    total = Fraction(0)
    for i, b in enumerate(betti):
        total += b * (even_term(i) if i % 2 == 0 else -odd_term(i))
    return total


def salamon_residual(betti: BettiVector, n: int) -> Fraction:
    """``sum_i (-1)^i b_i [3 i^2 - n(3n + 1/2)]``.

    Equals ``c_1 c_{n-1}`` when the Hodge numbers are mirror symmetric;
    vanishes for hyperKaehler manifolds.
    """
    if n % 2:
        raise NotApplicable(f"needs even complex dimension, got n={n}")
    _check_length(betti, n)
    k = n * (3 * n + Fraction(1, 2))
    return sum((Fraction((-1) ** i * b) * (3 * i * i - k) for i, b in enumerate(betti)),
               Fraction(0))


def c1cn1_lower_bound(betti: BettiVector, n: int) -> Fraction:
    """Lower bound for ``c_1 c_{n-1}`` of a compact Kaehler ``n``-fold."""
    _check_length(betti, n)
    k = n * (3 * n + 1)
    return _sum_by_parity(betti, lambda i: 3 * i * i - k, lambda i: 9 * i * i - k) / 2


def calabi_yau_residual(betti: BettiVector, n: int) -> Fraction:
    """Odd minus even Betti sums; nonnegative whenever ``c_1 c_{n-1} = 0``."""
    return -2 * c1cn1_lower_bound(betti, n)


def c2cn2_lower_bound(betti: BettiVector, n: int) -> Fraction:
    """Lower bound for ``c_2 c_{n-2}`` of a hyperKaehler ``n``-fold (never sharp)."""
    if n % 2:
        raise NotApplicable(f"needs even complex dimension, got n={n}")
    _check_length(betti, n)
    k = n * (75 * n ** 3 + 90 * n ** 2 + 5 * n - 2)
    return _sum_by_parity(betti, lambda i: 75 * i ** 4 - k,
                          lambda i: 165 * i ** 4 - k) / 24


# ---------------------------------------------------------------------------
# comparisons


def _equality(cid: str, left, right, detail="") -> ConstraintReport:
    st = Status.SATISFIED if left == right else Status.VIOLATED
    return ConstraintReport(cid, st, Fraction(left), Fraction(right), detail)


def _lower_bound(cid: str, value, bound, *, equality_ok: bool, detail="") -> ConstraintReport:
    value, bound = Fraction(value), Fraction(bound)
    if value > bound:
        st = Status.SATISFIED
    elif value == bound:
        st = Status.EQUALITY if equality_ok else Status.VIOLATED
    else:
        st = Status.VIOLATED
    return ConstraintReport(cid, st, value, bound, detail)


def check_c1cn1(betti: BettiVector, n: int, c1cn1, diamond: HodgeDiamond | None = None
                ) -> ConstraintReport:
    """``c_1 c_{n-1} >= bound`` with equality only for pure-type diamonds."""
    bound = c1cn1_lower_bound(betti, n)
    if diamond is None:
        return _lower_bound("bound.c1cn1", c1cn1, bound, equality_ok=True)
    pure = predicates(diamond).is_pure
    rep = _lower_bound("bound.c1cn1", c1cn1, bound, equality_ok=pure,
                       detail="pure type" if pure else "not pure type")
    if pure and rep.status is Status.SATISFIED:
        # pure type forces equality
        return ConstraintReport(rep.id, Status.VIOLATED, rep.left, rep.right,
                                "pure type requires equality")
    return rep


def check_calabi_yau(betti: BettiVector, n: int, diamond: HodgeDiamond | None = None
                     ) -> ConstraintReport:
    """Residual ``>= 0`` for data with ``c_1 c_{n-1} = 0``; zero iff pure type."""
    r = calabi_yau_residual(betti, n)
    pure = None if diamond is None else predicates(diamond).is_pure
    rep = _lower_bound("calabi-yau", r, 0, equality_ok=pure is not False)
    if pure and rep.status is Status.SATISFIED:
        return ConstraintReport(rep.id, Status.VIOLATED, rep.left, rep.right,
                                "pure type requires equality")
    return rep


def check_salamon(betti: BettiVector, n: int, chern: ChernNumbers | None = None,
                  hyperkaehler: bool = False) -> ConstraintReport:
    """Mirror-symmetric data: residual equals ``c_1 c_{n-1}`` (zero if hyperKaehler)."""
    try:
        r = salamon_residual(betti, n)
    except NotApplicable as exc:
        return ConstraintReport("salamon", Status.NOT_APPLICABLE, detail=str(exc))
    if hyperkaehler:
        return _equality("salamon", r, 0, "hyperKaehler residual vanishes")
    if chern is None:
        return ConstraintReport("salamon", Status.NOT_APPLICABLE, r, None,
                                "no Chern numbers supplied")
    return _equality("salamon", r, chern[chern_monomial(1, n - 1)],
                     "residual equals c1*c[n-1]")


def check_c2cn2(betti: BettiVector, n: int, c2cn2) -> ConstraintReport:
    try:
        bound = c2cn2_lower_bound(betti, n)
    except NotApplicable as exc:
        return ConstraintReport("bound.c2cn2", Status.NOT_APPLICABLE, detail=str(exc))
    return _lower_bound("bound.c2cn2", c2cn2, bound, equality_ok=False,
                        detail="strict for hyperKaehler data")


def minus_one_consistency(diamond: HodgeDiamond, chern: ChernNumbers,
                          depth: int | None = None) -> list[ConstraintReport]:
    """Compare ``h(p^i)`` of the diamond with its Chern-number formula, ``i <= depth``."""
    n = diamond.dimension
    if chern.dimension != n:
        raise ValueError(f"diamond has dimension {n}, Chern numbers {chern.dimension}")
    moments = chern_power_moments(n, n if depth is None else depth)
    out = []
    for i, formula in enumerate(moments):
        left = h_moment(diamond, MomentSpec.monomial(i))
        right = evaluate_genus(formula, chern).constant()
        out.append(_equality(f"minus-one.h(p^{i})", left, right,
                             "diamond moment vs Chern-number formula"))
    return out
