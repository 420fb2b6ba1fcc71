from collections import Counter
from fractions import Fraction as F
from itertools import combinations_with_replacement

import numpy as np
import pytest

from chiy.constraints import Status
from chiy.genus import ChernNumbers, evaluate_genus, hrr_genus_formula
from chiy.hodge import BettiVector, HodgeDiamond
from chiy.kernel import YPoly
from chiy.localization import (
    FixedPoint,
    FixedPointData,
    betti_determined_taylor,
    hamiltonian_obstruction_report,
    is_realizable,
    localized_betti,
    localized_chi_y,
    localized_chi_y_dual,
    localized_poincare,
    morse_indices,
)
from chiy.oracle import projective_space_chern_numbers


def by_id(reports):
    return {r.id: r for r in reports}


def test_morse_indices_from_weights():
    data = FixedPointData.from_weights(2, [(1, 2), (-1, 3), (-2, -5), ("1/3", "-2/7")])
    assert morse_indices(data) == [0, 1, 2, 1]
    with pytest.raises(ValueError):
        FixedPoint.from_weights((1, 0))
    with pytest.raises(ValueError):
        FixedPointData(2, ())
    with pytest.raises(ValueError):
        FixedPointData.from_indices(1, [2])
    with pytest.raises(ValueError):
        FixedPointData.from_weights(2, [(1,)])


def test_localized_examples():
    p2 = FixedPointData.from_indices(2, [0, 1, 2])
    s2s2 = FixedPointData.from_indices(2, [0, 1, 1, 2])
    pt = FixedPointData.from_indices(0, [0])
    assert localized_chi_y(p2) == YPoly([1, -1, 1])
    assert localized_chi_y(pt) == YPoly(1)
    assert localized_chi_y(s2s2) == YPoly([1, -2, 1])
    assert localized_poincare(p2) == YPoly({0: 1, 2: 1, 4: 1})
    assert localized_poincare(s2s2) == YPoly({0: 1, 2: 2, 4: 1})
    assert localized_poincare(pt) == YPoly(1)
    assert tuple(localized_betti(s2s2)) == (1, 0, 2, 0, 1)


def test_report_product_of_spheres():
    data = FixedPointData.from_indices(2, [0, 1, 1, 2])
    chern = ChernNumbers(2, {(1, 1): 8, (2,): 4})
    reps = hamiltonian_obstruction_report(data, chern=chern)
    assert is_realizable(reps)
    r = by_id(reps)
    assert r["loc.signature"].left == 0
    assert r["loc.chern.cn"].left == 4
    assert r["loc.chern.c1cn1"].right == 8
    assert r["loc.betti"].status is Status.NOT_APPLICABLE
    assert "unverifiable" in r["loc.betti"].detail


def test_report_projective_plane():
    data = FixedPointData.from_indices(2, [0, 1, 2])
    chern = ChernNumbers(2, {(1, 1): 9, (2,): 3})
    reps = hamiltonian_obstruction_report(data, HodgeDiamond.pure([1, 1, 1]), chern)
    assert all(r.status is Status.SATISFIED for r in reps)
    assert by_id(reps)["loc.chern.c1cn1"].right == 9


def test_report_bad_duality():
    reps = hamiltonian_obstruction_report(FixedPointData.from_indices(1, [0, 0, 1]))
    r = by_id(reps)["loc.duality"]
    assert r.violated
    assert localized_chi_y_dual(FixedPointData.from_indices(1, [0, 0, 1])) == YPoly([1, -2])
    assert not is_realizable(reps)


def test_report_detects_wrong_chern_and_betti():
    data = FixedPointData.from_indices(2, [0, 1, 2])
    reps = by_id(hamiltonian_obstruction_report(
        data, chern=ChernNumbers(2, {(1, 1): 8, (2,): 3}),
        betti=BettiVector((1, 0, 2, 0, 1))))
    assert reps["loc.chern.c1cn1"].violated
    assert reps["loc.chi-y"].violated
    assert reps["loc.betti"].violated
    assert reps["loc.chi-poincare"].violated


def test_report_depth_and_dimension_guards():
    data = FixedPointData.from_indices(6, range(7))
    with pytest.raises(ValueError):
        hamiltonian_obstruction_report(data, depth=5)
    chern = ChernNumbers(6, projective_space_chern_numbers(6))
    reps = hamiltonian_obstruction_report(data, chern=chern, depth=6, allow_deep=True)
    assert {f"loc.chern.a{i}" for i in range(7)} <= set(by_id(reps))
    assert is_realizable(reps)
    with pytest.raises(ValueError):
        hamiltonian_obstruction_report(data, chern=ChernNumbers(2))


def test_betti_determined_taylor():
    # P2: chi_y = 1 - y + y^2 = 3 - 3(1+y) + (1+y)^2
    assert betti_determined_taylor(BettiVector((1, 0, 1, 0, 1)), 2) == [3, -3, 1]


def histogram_palindromic(ds, n):
    c = Counter(ds)
    return all(c[d] == c[n - d] for d in range(n + 1))


@pytest.mark.parametrize("n", range(0, 4))
def test_duality_iff_palindromic(n):
    for size in range(1, 5):
        for ds in combinations_with_replacement(range(n + 1), size):
            rep = hamiltonian_obstruction_report(FixedPointData.from_indices(n, ds))[0]
            assert rep.id == "loc.duality"
            assert (rep.status is Status.SATISFIED) == histogram_palindromic(ds, n)


@pytest.mark.parametrize("n", range(0, 7))
def test_projective_space_cross_oracle(n):
    chern = ChernNumbers(n, projective_space_chern_numbers(n))
    data = FixedPointData.from_indices(n, range(n + 1))
    expect = YPoly([(-1) ** p for p in range(n + 1)])
    assert evaluate_genus(hrr_genus_formula(n), chern) == expect == localized_chi_y(data)
    assert chern[(n,)] == n + 1


def test_poincare_check_implies_signature_check():
    rng = np.random.default_rng(17)
    hits = 0
    for _ in range(300):
        n = int(rng.integers(0, 4))
        ds = [int(d) for d in rng.integers(0, n + 1, size=int(rng.integers(1, 6)))]
        data = FixedPointData.from_indices(n, ds)
        # sometimes the true Betti numbers, sometimes a perturbation
        b = list(localized_betti(data))
        if rng.random() < 0.5:
            b[2 * int(rng.integers(0, n + 1))] += int(rng.integers(0, 2))
        r = by_id(hamiltonian_obstruction_report(data, betti=BettiVector(tuple(b))))
        if r["loc.chi-poincare"].status is Status.SATISFIED:
            hits += 1
            assert r["loc.signature"].status is Status.SATISFIED
    assert hits > 50


def test_weights_are_exact():
    data = FixedPointData.from_weights(1, [(F(1, 3),), (F(-1, 10**30),)])
    assert morse_indices(data) == [0, 1]
