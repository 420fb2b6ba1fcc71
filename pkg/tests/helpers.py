"""Exact linear algebra for span-membership tests."""

from fractions import Fraction


def solve_exact(columns, target, unique=True):
    """Solve ``sum_j x_j columns[j] = target`` over Q.

    ``columns`` and ``target`` are dicts ``key -> Fraction``.  Returns a
    solution list (free variables set to 0), or ``None`` when inconsistent.
    With ``unique`` set, a rank-deficient system raises.
    """
    keys = sorted(set().union(target, *columns), key=repr)
    m = len(columns)
    rows = [[Fraction(col.get(k, 0)) for col in columns] + [Fraction(target.get(k, 0))]
            for k in keys]
    pivots = []
    r = 0
    for j in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][j]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][j]:
                f = rows[i][j]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
    if any(all(v == 0 for v in row[:m]) and row[m] for row in rows):
        return None
    if unique and len(pivots) < m:
        raise ValueError("solution is not unique")
    sol = [Fraction(0)] * m
    for r, j in enumerate(pivots):
        sol[j] = rows[r][m]
    return sol


def as_vector(poly):
    """Rational Chern polynomial -> {partition: Fraction}."""
    return {lam: coef.constant() for lam, coef in poly.items()}
