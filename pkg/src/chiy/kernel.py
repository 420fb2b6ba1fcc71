"""Exact symmetric-function kernel.

Everything here is exact: coefficients are :class:`fractions.Fraction`,
polynomials in ``y`` are sparse maps ``exponent -> Fraction``, and Chern
monomials ``c_I`` are keyed by integer partitions stored as weakly
decreasing tuples, e.g. ``c1^2*c3 <-> (3, 1, 1)``.

The main entry point is :func:`genus_expand`, which turns a one-variable
power series ``F(x)`` into the weight-``n`` part of ``prod_i F(x_i)``
written in elementary symmetric functions (Chern classes) of the roots.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

Partition = tuple  # weakly decreasing tuple of positive ints
Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# partitions


def partition(*parts: int) -> Partition:
    """Canonical partition from parts in any order; zero parts are dropped.

    >>> partition(1, 3, 0)
    (3, 1)
    """
    for p in parts:
        if int(p) != p or p < 0:
            raise ValueError(f"partition parts must be nonnegative integers, got {p!r}")
    return tuple(sorted((int(p) for p in parts if p), reverse=True))


def weight(lam: Partition) -> int:
    return sum(lam)


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partition_sort_key(lam: Partition):
    """Graded-lexicographic key; within a weight, ``c_n`` sorts first."""
    return (weight(lam), tuple(-p for p in lam))


def merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def format_monomial(lam: Partition) -> str:
    if not lam:
        return "1"
    out = []
    for part in sorted(set(lam)):
        mult = lam.count(part)
        out.append(f"c{part}" if mult == 1 else f"c{part}^{mult}")
    return "*".join(out)


# ---------------------------------------------------------------------------
# polynomials in y


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not an exact rational: {v!r}")


def format_rational(q: Fraction) -> str:
    return str(q)


class YPoly:
    """Immutable polynomial in ``y`` with exact rational coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[Scalar] | Scalar = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        elif isinstance(coeffs, (int, Fraction, Rational)):
            items = [(0, coeffs)]
        else:
            items = enumerate(coeffs)
        c = {}
        for k, v in items:
            if k < 0:
                raise ValueError("negative exponent in YPoly")
            v = _frac(v)
            if v:
                c[int(k)] = c.get(int(k), 0) + v
        self._c = {k: v for k, v in c.items() if v}
        self._hash = None

    @classmethod
    def y(cls) -> "YPoly":
        return cls({1: 1})

    @classmethod
    def _raw(cls, c: dict) -> "YPoly":
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    # -- inspection
    @property
    def degree(self) -> int:
        """Degree in ``y``; ``-1`` for the zero polynomial."""
        return max(self._c, default=-1)

    def coeff(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def coefficients(self) -> list[Fraction]:
        return [self.coeff(k) for k in range(self.degree + 1)]

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._c)

    def constant(self) -> Fraction:
        return self.coeff(0)

    def __bool__(self):
        return bool(self._c)

    # -- arithmetic
    @staticmethod
    def _coerce(other) -> "YPoly":
        if isinstance(other, YPoly):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return YPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return YPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return YPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            other = _frac(other)
            if not other:
                return YPoly._raw({})
            return YPoly._raw({k: v * other for k, v in self._c.items()})
        if not isinstance(other, YPoly):
            return NotImplemented
        c: dict[int, Fraction] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return YPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            return self * (1 / _frac(other))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a YPoly")
        out, base = YPoly(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- evaluation and substitution
    def __call__(self, value):
        return self.evaluate(value)

    def evaluate(self, value):
        """Horner evaluation; ``value`` may be a rational or a YPoly."""
        out = YPoly() if isinstance(value, YPoly) else Fraction(0)
        for k in range(self.degree, -1, -1):
            out = out * value + self.coeff(k)
        return out

    def taylor_at(self, point: Scalar) -> list[Fraction]:
        """Coefficients ``t_i`` with ``self(y) = sum t_i (y - point)^i``."""
        point = _frac(point)
        coeffs = self.coefficients()
        # synthetic division, repeated
        out = []
        while coeffs:
            acc = []
            r = Fraction(0)
            for c in reversed(coeffs):
                r = r * point + c
                acc.append(r)
            out.append(acc.pop())
            coeffs = list(reversed(acc))
        return out

    def reflect(self, n: int) -> "YPoly":
        """``y^n * self(1/y)``; requires ``degree <= n``."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds reflection degree {n}")
        return YPoly._raw({n - k: v for k, v in self._c.items()})

    def __repr__(self):
        return f"YPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, v in self.items():
            mono = "" if k == 0 else ("y" if k == 1 else f"y^{k}")
            if not mono:
                term = str(abs(v))
            elif abs(v) == 1:
                term = mono
            else:
                term = f"{abs(v)}*{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            s += f" {sign} {term}"
        return s

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients()]

    @classmethod
    def from_json(cls, data) -> "YPoly":
        return cls([Fraction(s) for s in data])


ZERO = YPoly()
ONE = YPoly(1)


# ---------------------------------------------------------------------------
# Chern polynomials


class ChernPolynomial:
    """Formal combination ``sum_I coef_I(y) * c_I`` keyed by partitions.

    ``grade`` is the common weight of the keys when known; it stays ``None``
    for inhomogeneous results and for the empty polynomial built without
    a grade.
    """

    __slots__ = ("_terms", "grade")

    def __init__(self, terms: Mapping[Partition, YPoly | Scalar] | None = None,
                 grade: int | None = None):
        t: dict[Partition, YPoly] = {}
        for lam, coef in (terms or {}).items():
            lam = partition(*lam)
            coef = coef if isinstance(coef, YPoly) else YPoly(coef)
            if grade is not None and weight(lam) != grade:
                raise ValueError(f"partition {lam} does not have weight {grade}")
            s = t.get(lam, ZERO) + coef
            if s:
                t[lam] = s
            else:
                t.pop(lam, None)
        self._terms = t
        self.grade = grade

    @classmethod
    def monomial(cls, lam: Partition, coef: YPoly | Scalar = 1) -> "ChernPolynomial":
        lam = partition(*lam)
        return cls({lam: coef}, grade=weight(lam))

    @classmethod
    def _raw(cls, terms: dict, grade):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.grade = grade
        return obj

    # -- inspection
    def __getitem__(self, lam) -> YPoly:
        return self._terms.get(partition(*lam), ZERO)

    def __contains__(self, lam):
        return partition(*lam) in self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def partitions(self) -> list[Partition]:
        return sorted(self._terms, key=partition_sort_key)

    def items(self):
        return [(lam, self._terms[lam]) for lam in self.partitions()]

    def is_zero(self) -> bool:
        return not self._terms

    def y_degree(self) -> int:
        return max((c.degree for c in self._terms.values()), default=-1)

    def is_rational(self) -> bool:
        """True when every coefficient is free of ``y``."""
        return all(c.is_constant() for c in self._terms.values())

    # -- arithmetic
    def _combine_grade(self, other):
        if self.grade is None or not self._terms:
            return other.grade if other._terms or self.grade is None else self.grade
        if other.grade is None or not other._terms:
            return self.grade
        return self.grade if self.grade == other.grade else None

    def __add__(self, other):
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        t = dict(self._terms)
        for lam, c in other._terms.items():
            s = t.get(lam, ZERO) + c
            if s:
                t[lam] = s
            else:
                t.pop(lam, None)
        return ChernPolynomial._raw(t, self._combine_grade(other))

    def __neg__(self):
        return ChernPolynomial._raw({k: -v for k, v in self._terms.items()}, self.grade)

    def __sub__(self, other):
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: YPoly | Scalar) -> "ChernPolynomial":
        t = {}
        for lam, c in self._terms.items():
            s = c * factor
            if s:
                t[lam] = s
        return ChernPolynomial._raw(t, self.grade)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational, YPoly)):
            return self.scale(other)
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        t: dict[Partition, YPoly] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                lam = merge(a, b)
                s = t.get(lam, ZERO) + ca * cb
                if s:
                    t[lam] = s
                else:
                    t.pop(lam, None)
        grade = None
        if self.grade is not None and other.grade is not None:
            grade = self.grade + other.grade
        return ChernPolynomial._raw(t, grade)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Rational, YPoly)):
            return self.scale(other)
        return NotImplemented

    def with_grade(self, grade: int) -> "ChernPolynomial":
        for lam in self._terms:
            if weight(lam) != grade:
                raise ValueError(f"partition {lam} does not have weight {grade}")
        return ChernPolynomial._raw(dict(self._terms), grade)

    def map_coefficients(self, fn) -> "ChernPolynomial":
        t = {}
        for lam, c in self._terms.items():
            s = fn(c)
            s = s if isinstance(s, YPoly) else YPoly(s)
            if s:
                t[lam] = s
        return ChernPolynomial._raw(t, self.grade)

    def y_coefficient(self, k: int) -> "ChernPolynomial":
        """The y-free ChernPolynomial multiplying ``y^k``."""
        return self.map_coefficients(lambda c: c.coeff(k))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._terms
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, values: Mapping[Partition, Scalar]) -> YPoly:
        """Substitute numbers for monomials; missing monomials read as 0."""
        out = ZERO
        for lam, c in self._terms.items():
            v = values.get(lam, 0)
            if v:
                out = out + c * _frac(v)
        return out

    # -- rendering
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.items():
            mono = format_monomial(lam)
            if c == 1:
                parts.append(mono)
            elif lam == ():
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ChernPolynomial(grade={self.grade}, {self})"

    def to_json(self) -> dict:
        return {
            "grade": self.grade,
            "terms": [
                {"partition": list(lam), "monomial": format_monomial(lam),
                 "coefficient": c.to_json()}
                for lam, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChernPolynomial":
        terms = {tuple(t["partition"]): YPoly.from_json(t["coefficient"])
                 for t in data["terms"]}
        return cls(terms, grade=data.get("grade"))


def chern_class(k: int) -> ChernPolynomial:
    """``c_k`` as a ChernPolynomial (``c_0 = 1``)."""
    return ChernPolynomial.monomial(partition(k))


# ---------------------------------------------------------------------------
# truncated power series with YPoly coefficients


class TruncatedSeries:
    """``sum_{k < order} a_k x^k`` with :class:`YPoly` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [c if isinstance(c, YPoly) else YPoly(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 0:
            raise ValueError("negative truncation order")
        cs = cs[:order] + [ZERO] * (order - len(cs))
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    def __getitem__(self, k: int) -> YPoly:
        return self.coeffs[k] if 0 <= k < self.order else ZERO

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}], order={self.order})"

    # -- ring operations
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational, YPoly)):
            return TruncatedSeries([c * other for c in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [ZERO] * n
        for i in range(n):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``x^k`` keeping the order."""
        return TruncatedSeries([ZERO] * k + list(self.coeffs), self.order)

    def divide_by_x(self, k: int = 1) -> "TruncatedSeries":
        """Exact division by ``x^k``; the order drops by ``k``."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by x^{k}")
        return TruncatedSeries(self.coeffs[k:])

    def _unit_constant(self) -> Fraction:
        c0 = self[0]
        if not c0.is_constant() or not c0:
            raise ValueError(
                f"constant term {c0} is not an invertible rational")
        return c0.constant()

    def invert(self) -> "TruncatedSeries":
        inv0 = 1 / self._unit_constant()
        n = self.order
        out = [YPoly(inv0)] + [ZERO] * (n - 1)
        for m in range(1, n):
            acc = ZERO
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * out[m - k]
            out[m] = acc * (-inv0)
        return TruncatedSeries(out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            return self * (1 / _frac(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.invert()

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the order drops by one."""
        return TruncatedSeries([self.coeffs[k] * k for k in range(1, self.order)])

    def exp(self) -> "TruncatedSeries":
        if self[0]:
            raise ValueError("exp needs a series with zero constant term")
        n = self.order
        if n == 0:
            return TruncatedSeries([])
        out = [ONE] + [ZERO] * (n - 1)
        # E' = S' E  =>  m E_m = sum_k k s_k E_{m-k}
        for m in range(1, n):
            acc = ZERO
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    acc = acc + self.coeffs[k] * (out[m - k] * k)
            out[m] = acc / m
        return TruncatedSeries(out)

    def log(self) -> "TruncatedSeries":
        """Logarithm of a series with constant term exactly 1."""
        if self[0] != 1:
            raise ValueError(
                f"log needs constant term 1, got {self[0]}; rescale first")
        n = self.order
        out = [ZERO] * n
        # L' = U'/U  =>  m l_m = m u_m - sum_{k=1}^{m-1} k l_k u_{m-k}
        for m in range(1, n):
            acc = self.coeffs[m] * m
            for k in range(1, m):
                if out[k] and self.coeffs[m - k]:
                    acc = acc - out[k] * self.coeffs[m - k] * k
            out[m] = acc / m
        return TruncatedSeries(out)


def series_arith(a: TruncatedSeries, b: TruncatedSeries | None = None,
                 kind: str = "add") -> TruncatedSeries:
    """Dispatch helper: ``kind`` in {add, mul, invert-unit, exp, log-unit}."""
    if kind in ("add", "mul"):
        if b is None:
            raise ValueError(f"{kind} needs two operands")
        return a + b if kind == "add" else a * b
    if kind == "invert-unit":
        return a.invert()
    if kind == "exp":
        return a.exp()
    if kind == "log-unit":
        return a.log()
    raise ValueError(f"unknown series operation {kind!r}")


def exp_series(order: int, scale: Scalar = 1) -> TruncatedSeries:
    """``exp(scale * x)`` truncated at ``order``."""
    s = _frac(scale)
    coeffs, term = [], Fraction(1)
    for k in range(order):
        coeffs.append(term)
        term = term * s / (k + 1)
    return TruncatedSeries(coeffs, order)


def chi_y_factor(order: int) -> TruncatedSeries:
    """The characteristic series ``x (1 + y e^{-x}) / (1 - e^{-x})``.

    Built from the truncated exponential and exact series division;
    no Bernoulli numbers are tabulated.
    """
    e = exp_series(order + 1, -1)
    # (1 - e^{-x}) / x has constant term 1
    todd_inverse = (1 - e).divide_by_x()
    todd = todd_inverse.invert()
    twist = TruncatedSeries([ONE], order) + e.truncate(order) * YPoly.y()
    return todd.truncate(order) * twist


# ---------------------------------------------------------------------------
# symmetric functions


@lru_cache(maxsize=None)
def power_sum_in_elementary(k: int) -> ChernPolynomial:
    """``p_k`` in elementary symmetric functions via Newton's identities.

    >>> str(power_sum_in_elementary(3))
    '(3)*c3 + (-3)*c1*c2 + c1^3'
    """
    if k < 1:
        raise ValueError("power sums are indexed from 1")
    out = chern_class(k).scale((-1) ** (k - 1) * k)
    for i in range(1, k):
        term = chern_class(i) * power_sum_in_elementary(k - i)
        out = out + term.scale((-1) ** (i - 1))
    return out.with_grade(k)


def _rescale_to_unit(factor: TruncatedSeries) -> TruncatedSeries:
    # F(x) = c0 * G(x / c0) with G_k = f_k c0^{k-1}: the weight-n part of
    # prod_{i<=n} F(x_i) equals that of prod_{i<=n} G(x_i).
    c0 = factor[0]
    if not c0:
        raise ValueError("factor has zero constant term")
    out, power = [ONE], ONE
    for k in range(1, factor.order):
        out.append(factor[k] * power)
        power = power * c0
    return TruncatedSeries(out)


def genus_expand(factor: TruncatedSeries, n: int) -> ChernPolynomial:
    """Weight-``n`` part of ``prod_{i=1}^n factor(x_i)`` in Chern monomials.

    The factor is rescaled to constant term 1, its logarithm gives
    ``sum_k g_k p_k``, and the exponential is taken in the graded ring of
    Chern polynomials truncated at weight ``n``.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if factor.order < n + 1:
        raise ValueError(f"factor order {factor.order} too small for n={n}; need {n + 1}")
    unit = _rescale_to_unit(factor.truncate(n + 1))
    g = unit.log()
    s = [None] + [power_sum_in_elementary(k).scale(g[k]) if g[k] else None
                  for k in range(1, n + 1)]
    e = [ChernPolynomial({(): ONE}, grade=0)]
    for m in range(1, n + 1):
        acc = ChernPolynomial(grade=m)
        for k in range(1, m + 1):
            if s[k] is not None and e[m - k]:
                acc = acc + (s[k] * e[m - k]).scale(k)
        e.append(acc.scale(Fraction(1, m)).with_grade(m))
    return e[n].with_grade(n)


def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind ``S(m, k)``."""
    return _stirling2(m, k)


@lru_cache(maxsize=None)
def _stirling2(m: int, k: int) -> int:
    if m == k:
        return 1
    if k == 0 or k > m:
        return 0
    return k * _stirling2(m - 1, k) + _stirling2(m - 1, k - 1)
