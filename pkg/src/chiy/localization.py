"""Fixed-point formulas for torus actions with isolated fixed points.

A fixed point ``P`` contributes ``(-y)^{d_P}`` to chi_y and ``y^{2 d_P}`` to
the Poincare polynomial, where ``d_P`` counts the negative weights at ``P``.
Weights are exact rationals: only their signs matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .constraints import ConstraintReport, Status
from .genus import (
    ChernNumbers,
    chern_monomial,
    evaluate_genus,
    hrr_genus_formula,
    taylor_at_minus_one,
)
from .hodge import BettiVector, HodgeDiamond, betti_from_diamond, poincare_polynomial
from .kernel import ZERO, YPoly

DEFAULT_DEPTH = 4


@dataclass(frozen=True)
class FixedPoint:
    index: int
    weights: tuple | None = None

    @classmethod
    def from_weights(cls, weights: Iterable) -> "FixedPoint":
        ws = tuple(Fraction(w) for w in weights)
        if any(w == 0 for w in ws):
            raise ValueError(f"zero weight {ws}: fixed point is not isolated and simple")
        return cls(sum(1 for w in ws if w < 0), ws)


@dataclass(frozen=True)
class FixedPointData:
    dimension: int
    points: tuple

    def __post_init__(self):
        n = self.dimension
        if n < 0:
            raise ValueError("dimension must be nonnegative")
        if not self.points:
            raise ValueError("fixed-point set must be nonempty")
        for P in self.points:
            if P.weights is not None and len(P.weights) != n:
                raise ValueError(f"fixed point has {len(P.weights)} weights, expected {n}")
            if not 0 <= P.index <= n:
                raise ValueError(f"index {P.index} outside 0..{n}")

    @classmethod
    def from_weights(cls, n: int, weights: Sequence[Iterable]) -> "FixedPointData":
        return cls(n, tuple(FixedPoint.from_weights(w) for w in weights))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "FixedPointData":
        return cls(n, tuple(FixedPoint(int(d)) for d in indices))


def morse_indices(data: FixedPointData) -> list[int]:
    """``d_P`` per fixed point; the moment map has Morse index ``2 d_P`` there."""
    return [P.index for P in data.points]


def localized_chi_y(data: FixedPointData) -> YPoly:
    out = ZERO
    for d in morse_indices(data):
        out = out + YPoly({d: (-1) ** d})
    return out


def localized_chi_y_dual(data: FixedPointData) -> YPoly:
    n = data.dimension
    out = ZERO
    for d in morse_indices(data):
        out = out + YPoly({n - d: (-1) ** (n - d)})
    return out


def localized_poincare(data: FixedPointData) -> YPoly:
    out = ZERO
    for d in morse_indices(data):
        out = out + YPoly({2 * d: 1})
    return out


def localized_betti(data: FixedPointData) -> BettiVector:
    """Betti numbers forced by the perfect moment map: ``b_{2i} = #{d_P = i}``."""
    b = [0] * (2 * data.dimension + 1)
    for d in morse_indices(data):
        b[2 * d] += 1
    return BettiVector(tuple(b))


def betti_determined_taylor(betti: BettiVector, n: int) -> list[Fraction]:
    """Values ``a_0..a_n`` forced by ``chi_y = sum_p (-1)^p b_{2p} y^p``."""
    chi = YPoly([(-1) ** p * betti[2 * p] for p in range(n + 1)])
    t = chi.taylor_at(-1)
    return [t[i] if i < len(t) else Fraction(0) for i in range(n + 1)]


def _sub_neg_square(p: YPoly) -> YPoly:
    # p(-y^2)
    return YPoly({2 * k: c * (-1) ** k for k, c in p.items()})


def hamiltonian_obstruction_report(
    data: FixedPointData,
    diamond: HodgeDiamond | None = None,
    chern: ChernNumbers | None = None,
    betti: BettiVector | None = None,
    depth: int = DEFAULT_DEPTH,
    allow_deep: bool = False,
) -> list[ConstraintReport]:
    """Run every check a Hamiltonian action with these fixed points must pass.

    ``violated`` records mean the data cannot come from such an action;
    ``not-applicable`` records mark checks left unverifiable for lack of
    companion data.
    """
    n = data.dimension
    if diamond is not None and diamond.dimension != n:
        raise ValueError(f"diamond dimension {diamond.dimension} != {n}")
    if chern is not None and chern.dimension != n:
        raise ValueError(f"Chern numbers dimension {chern.dimension} != {n}")
    if betti is not None and len(betti) != 2 * n + 1:
        raise ValueError(f"Betti vector length {len(betti)} != {2 * n + 1}")
    if depth > DEFAULT_DEPTH and not allow_deep:
        raise ValueError(f"depth > {DEFAULT_DEPTH} needs allow_deep=True")
    depth = min(depth, n)

    chi = localized_chi_y(data)
    loc_betti = localized_betti(data)
    reports = []

    dual = localized_chi_y_dual(data)
    reports.append(_poly_equality("loc.duality", chi, dual,
                                  "sum (-y)^d vs sum (-y)^(n-d)"))

    if chern is not None:
        hrr = evaluate_genus(hrr_genus_formula(n), chern)
        reports.append(_poly_equality("loc.chi-y", hrr, chi,
                                      "Chern-number chi_y vs localized chi_y"))
    else:
        reports.append(_unverifiable("loc.chi-y", "no Chern numbers supplied"))

    supplied = betti
    if diamond is not None:
        from_diamond = betti_from_diamond(diamond)
        if supplied is not None and supplied != from_diamond:
            reports.append(ConstraintReport(
                "loc.betti-input", Status.VIOLATED,
                detail=f"betti {list(supplied)} disagrees with diamond {list(from_diamond)}"))
        supplied = from_diamond
    observed = loc_betti if supplied is None else supplied

    reports.append(_poly_equality(
        "loc.chi-poincare", _sub_neg_square(chi), poincare_polynomial(observed),
        "chi_{-y^2} vs P_y" + ("" if supplied is not None else " (localized)")))

    signature = chi.evaluate(1)
    alt_even = sum((-1) ** i * observed[2 * i] for i in range(n + 1))
    reports.append(ConstraintReport(
        "loc.signature",
        Status.SATISFIED if signature == alt_even else Status.VIOLATED,
        signature, Fraction(alt_even), "signature vs alternating even Betti sum"))

    if chern is None:
        reports.append(_unverifiable("loc.chern", "no Chern numbers supplied"))
    else:
        b_even = sum(loc_betti[2 * i] for i in range(n + 1))
        reports.append(_equality("loc.chern.cn", chern[(n,)], b_even,
                                 "c_n vs sum b_2i"))
        if n >= 1:
            weighted = sum(i * (i - 1) * loc_betti[2 * i] for i in range(n + 1))
            forced = 6 * weighted - Fraction(n * (3 * n - 5), 2) * b_even
            reports.append(_equality("loc.chern.c1cn1", chern[chern_monomial(1, n - 1)],
                                     forced, "c1*c[n-1] vs Betti expression"))
        forced_a = betti_determined_taylor(loc_betti, n)
        for i, a in enumerate(taylor_at_minus_one(n, depth)):
            reports.append(_equality(
                f"loc.chern.a{i}", evaluate_genus(a, chern).constant(), forced_a[i],
                "Taylor coefficient at y=-1: Chern numbers vs Betti numbers"))

    if supplied is None:
        reports.append(_unverifiable("loc.betti", "no diamond or Betti numbers supplied"))
    else:
        reports.append(_poly_equality(
            "loc.betti", poincare_polynomial(supplied), localized_poincare(data),
            "supplied Betti numbers vs sum y^(2d)"))
    return reports


def _unverifiable(cid: str, why: str) -> ConstraintReport:
    return ConstraintReport(cid, Status.NOT_APPLICABLE, detail=f"unverifiable: {why}")


def _equality(cid, left, right, detail) -> ConstraintReport:
    left, right = Fraction(left), Fraction(right)
    return ConstraintReport(cid, Status.SATISFIED if left == right else Status.VIOLATED,
                            left, right, detail)


def _poly_equality(cid, left: YPoly, right: YPoly, detail) -> ConstraintReport:
    ok = left == right
    return ConstraintReport(
        cid, Status.SATISFIED if ok else Status.VIOLATED, detail=detail,
        witnesses={} if ok else {"left": str(left), "right": str(right)})


def is_realizable(reports: Iterable[ConstraintReport]) -> bool:
    return not any(r.violated for r in reports)
