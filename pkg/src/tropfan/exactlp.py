"""Exact rational linear feasibility via a phase-I simplex with Bland's rule.

Solves "find x >= 0 with A x = b" over Fractions, with no tolerances: the
answer is exact.  Bland's pivoting rule guarantees termination despite
degeneracy.  This is the workhorse behind convex-hull redundancy tests and
separating-point certificates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def solve_eq_nonneg(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Return x >= 0 with A x = b, or None when the system is infeasible."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    rows = []
    rhs = []
    for i in range(m):
        r = [Fraction(e) for e in A[i]]
        v = Fraction(b[i])
        if v < 0:
            r = [-e for e in r]
            v = -v
        rows.append(r)
        rhs.append(v)

    # Tableau columns: n real variables, m artificials, then the rhs.
    width = n + m
    T = [rows[i] + [Fraction(int(j == i)) for j in range(m)] + [rhs[i]]
         for i in range(m)]
    basis = [n + i for i in range(m)]

    # Phase-I objective: minimize the artificial sum. Reduced-cost row for
    # the initial artificial basis is the negated column sums over [A | I | b].
    cost = [Fraction(0)] * n + [Fraction(1)] * m
    red = [-sum(T[i][j] for i in range(m)) for j in range(width + 1)]
    for j in range(width):
        red[j] += cost[j]

    while True:
        enter = next((j for j in range(width) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # Unbounded phase-I cannot happen (objective bounded below by 0);
            # guard anyway.
            return None
        piv = T[leave][enter]
        T[leave] = [e / piv for e in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [e - f * g for e, g in zip(T[i], T[leave])]
        if red[enter]:
            f = red[enter]
            red = [e - f * g for e, g in zip(red, T[leave])]
        basis[leave] = enter

    if -red[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][width]
    return x


def in_convex_hull(point: Sequence, vertices: Sequence[Sequence]) -> bool:
    """Exact test: is point a convex combination of the given vertices?"""
    pts = list(vertices)
    if not pts:
        return False
    dim = len(point)
    A = [[Fraction(p[i]) for p in pts] for i in range(dim)]
    A.append([Fraction(1)] * len(pts))
    b = [Fraction(e) for e in point] + [Fraction(1)]
    return solve_eq_nonneg(A, b) is not None


def strict_separator(point: Sequence, others: Sequence[Sequence]) -> Optional[list[Fraction]]:
    """A rational w with point . w >= 1 + v . w for every v in others.

    Exists iff point is outside the convex hull of others.  Found by solving
    the slack form (point - v) . (w+ - w-) - s_v = 1, all variables >= 0.
    """
    pts = list(others)
    dim = len(point)
    if not pts:
        raise ValueError("need at least one point to separate from")
    k = len(pts)
    A = []
    b = []
    for idx, v in enumerate(pts):
        diff = [Fraction(point[i]) - Fraction(v[i]) for i in range(dim)]
        row = diff + [-e for e in diff] + [Fraction(-int(j == idx)) for j in range(k)]
        A.append(row)
        b.append(Fraction(1))
    x = solve_eq_nonneg(A, b)
    if x is None:
        return None
    return [x[i] - x[dim + i] for i in range(dim)]
