from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chiy.kernel import (
    ChernPolynomial,
    TruncatedSeries,
    YPoly,
    chern_class,
    chi_y_factor,
    exp_series,
    genus_expand,
    partition,
    partitions_of,
    power_sum_in_elementary,
    series_arith,
    stirling2,
)
from chiy.oracle import (
    brute_force_genus,
    elementary_values,
    evaluate_at_roots,
    power_sum_values,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def long_division(num, den, order):
    """Plain-list power series division, independent of TruncatedSeries."""
    out = []
    rem = list(num) + [F(0)] * order
    for k in range(order):
        q = rem[k] / den[0]
        out.append(q)
        for j, d in enumerate(den):
            if k + j < len(rem):
                rem[k + j] -= q * d
    return out


# -- partitions


def test_partition_canonical():
    assert partition(1, 3, 1) == (3, 1, 1)
    assert partition(2, 0) == (2,)
    with pytest.raises(ValueError):
        partition(-1)


def test_partitions_of_counts():
    assert [len(list(partitions_of(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


# -- YPoly


def test_ypoly_drops_zeros_and_prints():
    p = YPoly([1, 0, F(-1, 2)])
    assert p.degree == 2
    assert str(p) == "1 - 1/2*y^2"
    assert YPoly([0, 0]).is_zero()


def test_taylor_at_roundtrip():
    p = YPoly([3, -2, 5, 1])
    t = p.taylor_at(-1)
    u = YPoly([1, 1])
    rebuilt = sum((u ** i * c for i, c in enumerate(t)), YPoly())
    assert rebuilt == p


def test_reflect_requires_degree():
    assert YPoly([1, 2]).reflect(3) == YPoly({3: 1, 2: 2})
    with pytest.raises(ValueError):
        YPoly([0, 0, 1]).reflect(1)


# -- series


def test_exp_of_x():
    x = TruncatedSeries.variable(4)
    assert x.exp() == TruncatedSeries([1, 1, F(1, 2), F(1, 6)])


def test_invert_one_minus_x():
    s = TruncatedSeries([1, -1], 3)
    assert series_arith(s, kind="invert-unit") == TruncatedSeries([1, 1, 1])


def test_log_exp_recovers_todd_series():
    order = 4
    e = exp_series(order + 1, -1)
    u = (1 - e).divide_by_x()
    assert u.order == order
    got = (-u.log()).exp()
    one = [F(1)] + [F(0)] * 8
    den = [F((-1) ** k, _fact(k + 1)) for k in range(9)]  # (1 - e^{-x})/x
    expect = long_division(one, den, 8)
    assert expect[:4] == [1, F(1, 2), F(1, 12), 0]
    assert got == TruncatedSeries(expect[:order])


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def test_series_errors():
    x = TruncatedSeries.variable(4)
    with pytest.raises(ValueError):
        x.invert()
    with pytest.raises(ValueError):
        (x + 1).exp()
    with pytest.raises(ValueError):
        (x + 2).log()
    with pytest.raises(ValueError):
        TruncatedSeries([YPoly([1, 1])], 3).invert()
    with pytest.raises(ValueError):
        series_arith(x, kind="sqrt")


def test_mul_uses_min_order():
    a = TruncatedSeries([1, 1], 5)
    b = TruncatedSeries([1, 1], 3)
    assert (a * b).order == 3


@st.composite
def unit_series(draw, lead=None):
    order = draw(st.integers(1, 12))
    c0 = lead if lead is not None else draw(rationals.filter(lambda q: q != 0))
    rest = draw(st.lists(st.lists(rationals, max_size=3), min_size=order - 1,
                         max_size=order - 1))
    return TruncatedSeries([YPoly(c0)] + [YPoly(r) for r in rest], order)


@settings(max_examples=40, deadline=None)
@given(unit_series(lead=F(1)))
def test_exp_log_roundtrip(u):
    assert u.log().exp() == u


@settings(max_examples=40, deadline=None)
@given(unit_series())
def test_double_inverse(u):
    assert u.invert().invert() == u
    assert (u * u.invert()) == TruncatedSeries([1], u.order)


@settings(max_examples=30, deadline=None)
@given(unit_series(), unit_series(), unit_series())
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


def test_chi_y_factor_low_terms():
    f = chi_y_factor(3)
    assert f[0] == YPoly([1, 1])
    assert f[1] == YPoly([F(1, 2), F(-1, 2)])
    assert f[2] == YPoly([F(1, 12), F(1, 12)])


# -- power sums


def test_power_sums_small():
    assert power_sum_in_elementary(1) == chern_class(1)
    p2 = chern_class(1) * chern_class(1) - chern_class(2).scale(2)
    assert power_sum_in_elementary(2) == p2
    p3 = (chern_class(1) * chern_class(1) * chern_class(1)
          - (chern_class(1) * chern_class(2)).scale(3) + chern_class(3).scale(3))
    assert power_sum_in_elementary(3) == p3
    assert power_sum_in_elementary(5).grade == 5


def test_power_sum_two_by_expansion():
    # (x1+x2+x3)^2 = p2 + 2 e2 on explicit values
    xs = [F(2), F(-3), F(5, 2)]
    e = elementary_values(xs)
    assert sum(xs) ** 2 - 2 * e[(2,)] == power_sum_values(xs, 2)


def test_power_sum_integer_coefficients():
    for k in range(1, 9):
        for _, coef in power_sum_in_elementary(k).items():
            assert coef.is_constant() and coef.constant().denominator == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.lists(rationals, min_size=1, max_size=5))
def test_power_sum_evaluates_correctly(k, xs):
    got = evaluate_at_roots(power_sum_in_elementary(k), xs)
    assert got == YPoly(power_sum_values(xs, k))


# -- genus expansion


def test_genus_expand_examples():
    assert genus_expand(TruncatedSeries([1, 1], 4), 3) == chern_class(3)
    assert genus_expand(TruncatedSeries([1], 3), 2).is_zero()
    got = genus_expand(chi_y_factor(2), 1)
    assert got == ChernPolynomial({(1,): YPoly([F(1, 2), F(-1, 2)])}, grade=1)


def test_genus_expand_errors():
    with pytest.raises(ValueError):
        genus_expand(TruncatedSeries([1, 1], 2), 3)
    with pytest.raises(ValueError):
        genus_expand(TruncatedSeries([0, 1], 4), 3)


@pytest.mark.parametrize("n", range(9))
def test_total_chern_class(n):
    assert genus_expand(TruncatedSeries([1, 1], n + 1), n) == chern_class(n).with_grade(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_total_chern_class_brute_force(n):
    f = TruncatedSeries([1, 1], n + 1)
    assert brute_force_genus(f, n) == chern_class(n).with_grade(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_product_of_factors(n):
    f = TruncatedSeries([1, 1], n + 1)
    expect = ChernPolynomial(grade=n)
    for a in range(n + 1):
        expect = expect + chern_class(a) * chern_class(n - a)
    assert genus_expand(f * f, n) == expect.with_grade(n)


def test_stirling():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(0, 0) == 1
