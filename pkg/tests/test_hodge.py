from fractions import Fraction as F

import numpy as np
import pytest

from chiy.hodge import (
    BettiVector,
    HodgeDiamond,
    MomentSpec,
    Tier,
    betti_from_diamond,
    chi_profile,
    f_moment,
    h_moment,
    poincare_duality_residual,
    poincare_polynomial,
    predicates,
    random_kaehler_diamond,
    random_mirror_diamond,
    validate,
    weighted_betti_sum,
)
from chiy.kernel import YPoly

P2 = HodgeDiamond.pure([1, 1, 1])
K3 = HodgeDiamond.from_rows([[1, 0, 1], [0, 20, 0], [1, 0, 1]])
TORUS = HodgeDiamond.from_rows([[1, 1], [1, 1]])
ZERO2 = HodgeDiamond.pure([0, 0, 0])


def test_layout_and_text_roundtrip():
    d = HodgeDiamond.from_rows([[1, 2], [3, 4]])
    assert d[1, 0] == 2 and d[0, 1] == 3
    assert HodgeDiamond.from_text(d.to_text()) == d
    assert d.as_array()[1, 0] == 2
    with pytest.raises(ValueError):
        HodgeDiamond.from_rows([[1, 0], [0]])


def test_validate_examples():
    assert validate(P2, Tier.KAEHLER) == []
    bad = HodgeDiamond.pure([0, 1, 0])
    [v] = validate(bad, Tier.KAEHLER)
    assert v.witnesses == ((0, 0), (2, 2))
    assert validate(K3, Tier.MIRROR) == []
    assert validate(P2, "mirror")  # h^{0,0} != h^{0,2}
    assert validate(HodgeDiamond.pure([-1, 0]), Tier.RAW)
    assert validate(HodgeDiamond.pure([1, 1]), Tier.MIRROR)  # odd n


def test_betti_examples():
    assert tuple(betti_from_diamond(P2)) == (1, 0, 1, 0, 1)
    assert tuple(betti_from_diamond(K3)) == (1, 0, 22, 0, 1)
    assert tuple(betti_from_diamond(ZERO2)) == (0,) * 5
    with pytest.raises(ValueError):
        BettiVector((1, -1))


def test_chi_profile_examples():
    chis, chi = chi_profile(K3)
    assert chis == [2, -20, 2] and chi == YPoly([2, -20, 2]) and chi.evaluate(-1) == 24
    assert chi_profile(P2)[1] == YPoly([1, -1, 1])
    assert chi_profile(ZERO2)[1].is_zero()


def test_moment_examples():
    assert h_moment(K3, (1, 0)) == 24
    assert h_moment(K3, (1, 1)) == 24 == F(2, 2) * h_moment(K3, (1, 0))
    for d in (P2, K3, TORUS):
        assert h_moment(d, (0, 0)) == chi_profile(d)[1].evaluate(-1)
    k3b = betti_from_diamond(K3)
    assert f_moment(k3b, 2) == 104
    assert f_moment(k3b, 4) == 608
    assert f_moment(k3b, 0) == k3b.euler() == 24
    spec = MomentSpec(((2, 0, 1), (1, 1, -3)))
    assert spec(2, 1) == 4 - 6


def test_predicates_examples():
    assert predicates(P2).is_pure
    flags = predicates(K3)
    assert not flags.is_pure and flags.is_mirror and flags.is_kaehler_symmetric
    assert not predicates(TORUS).is_pure


def test_poincare_examples():
    assert poincare_polynomial(betti_from_diamond(K3)) == YPoly({0: 1, 2: 22, 4: 1})
    assert poincare_polynomial(BettiVector((1,))) == YPoly(1)
    assert poincare_polynomial(betti_from_diamond(P2)) == YPoly({0: 1, 2: 1, 4: 1})
    assert poincare_duality_residual(BettiVector((1, 0, 1))).is_zero()
    assert not poincare_duality_residual(BettiVector((1, 2, 0))).is_zero()


def kaehler_suite(count=120, seed=7):
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        n = int(rng.integers(1, 5))
        out.append(random_kaehler_diamond(rng, n, pure=(k % 4 == 0)))
    return out


def test_random_diamonds_are_valid():
    rng = np.random.default_rng(1)
    for d in kaehler_suite():
        assert validate(d, Tier.KAEHLER) == []
    for n in (2, 4):
        assert validate(random_mirror_diamond(rng, n), Tier.MIRROR) == []
    with pytest.raises(ValueError):
        random_mirror_diamond(rng, 3)


def test_betti_moment_identities():
    for d in kaehler_suite():
        b = betti_from_diamond(d)
        assert f_moment(b, 2) == 2 * h_moment(d, (2, 0)) + 2 * h_moment(d, (1, 1))
        assert f_moment(b, 4) == (2 * h_moment(d, (4, 0)) + 8 * h_moment(d, (3, 1))
                                  + 6 * h_moment(d, (2, 2)))


def test_purity_inequalities():
    suite = kaehler_suite()
    assert sum(predicates(d).is_pure for d in suite) >= 30
    assert sum(not predicates(d).is_pure for d in suite) >= 30
    for d in suite:
        b = betti_from_diamond(d)
        lhs2, rhs2 = 4 * h_moment(d, (1, 1)), weighted_betti_sum(b, 2)
        lhs4, rhs4 = 16 * h_moment(d, (2, 2)), weighted_betti_sum(b, 4)
        assert lhs2 <= rhs2 and lhs4 <= rhs4
        pure = predicates(d).is_pure
        assert (lhs2 == rhs2) == pure
        assert (lhs4 == rhs4) == pure


def test_mirror_reduction():
    rng = np.random.default_rng(3)
    diamonds = [K3] + [random_mirror_diamond(rng, n) for n in (2, 4, 4, 6) for _ in range(5)]
    for d in diamonds:
        n = d.dimension
        assert h_moment(d, (1, 1)) == F(n, 2) * h_moment(d, (1, 0))
