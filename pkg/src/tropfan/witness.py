"""Separating-witness certificates for unions of rays.

Given a finite union of rational rays Z and a rational point p outside it,
there is a pair of polynomial functions that agree everywhere on Z yet differ
at p; this certifies that the points indistinguishable by all Z-agreeing
pairs are exactly Z itself.  The construction is direct: take an integer
basis of the hyperplane orthogonal to p, blow it up by a factor K large
enough to dominate every Z-direction that has positive inner product with p,
and adjoin the p-direction monomial to one side only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .fan import primitive
from .lattice import hnf
from .tropoly import TropPoly

Rational = Fraction | int


def integerize(p: Sequence[Rational]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to its primitive integer direction."""
    fr = [Fraction(e) for e in p]
    if not any(fr):
        raise ValueError("the zero vector has no direction")
    lcm = 1
    for e in fr:
        d = e.denominator
        lcm = lcm * d // _gcd(lcm, d)
    return primitive([int(e * lcm) for e in fr])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def orth_basis(p: Sequence[Rational]) -> list[tuple[int, ...]]:
    """An integer basis of the lattice orthogonal to p (n-1 vectors).

    Rows 2..n of the unimodular transform that puts the column vector of
    p's primitive direction into Hermite form span the full integer kernel;
    the result is re-canonicalized through HNF.  Empty in dimension 1.
    """
    d = integerize(p)
    n = len(d)
    if n == 1:
        return []
    _, U = hnf([(e,) for e in d])
    kernel, _ = hnf(U[1:])
    return [row for row in kernel if any(row)]


@dataclass(frozen=True)
class WitnessPair:
    """Polynomials equal on a ray union but split at a designated point.

    g is f with one extra monomial: the primitive direction of the point.
    f holds the zero exponent and the K-scaled orthogonal basis vectors in
    both signs, so it evaluates to 0 along the point's ray while g is
    positive there.
    """

    f: TropPoly
    g: TropPoly
    point: tuple[Fraction, ...]
    direction: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    K: int

    def to_json_dict(self) -> dict:
        return {"f": self.f.to_json(),
                "g": self.g.to_json(),
                "point": [str(c) for c in self.point],
                "K": self.K}


class PointInSupportError(ValueError):
    """The designated point lies on the ray union (no witness exists)."""


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def separating_pair(z_dirs: Sequence[Sequence[int]],
                    p: Sequence[Rational]) -> WitnessPair:
    """Build the witness pair for a point off the given ray union.

    K exceeds the ratio (d1 . d) / max_i |e_i . d| over every union
    direction d on the positive side of p's hyperplane; the denominator is
    never zero there, because vanishing against the whole orthogonal basis
    would force d parallel to p, contradicting the point being off-support.
    """
    point = tuple(Fraction(e) for e in p)
    if not any(point):
        raise PointInSupportError("the origin lies in every cone-closed set")
    d1 = integerize(point)
    dirs = [primitive(d) for d in z_dirs]
    if d1 in dirs:
        raise PointInSupportError(f"point direction {d1} lies in the ray union")
    basis = orth_basis(point)
    n = len(d1)
    K = 1
    for d in dirs:
        up = sum(a * b for a, b in zip(d1, d))
        if up <= 0:
            continue
        denom = max(abs(sum(a * b for a, b in zip(e, d))) for e in basis)
        K = max(K, 1 + _ceil_div(up, denom))
    monos = [(0,) * n]
    for e in basis:
        monos.append(tuple(K * c for c in e))
        monos.append(tuple(-K * c for c in e))
    f = TropPoly(n, monos)
    g = TropPoly(n, monos + [d1])
    return WitnessPair(f, g, point, d1, tuple(basis), K)


def verify_witness(w: WitnessPair, z_dirs: Sequence[Sequence[int]]) -> bool:
    """Exact check of the witness contract: f and g agree on every union
    direction and differ at the designated point."""
    for d in z_dirs:
        if w.f.eval(d) != w.g.eval(d):
            return False
    return w.f.eval(w.point) != w.g.eval(w.point)


def in_congruence_variety(q: Sequence[Rational],
                          z_dirs: Sequence[Sequence[int]]
                          ) -> tuple[bool, Optional[WitnessPair]]:
    """Does q lie in the set carved out by all pairs agreeing on the union?

    That set is the union itself: membership means q is the origin or a
    nonnegative rational multiple of a union direction.  A verified witness
    pair at q is attached as the certificate whenever the answer is no.
    """
    point = tuple(Fraction(e) for e in q)
    if not any(point):
        return True, None
    d = integerize(point)
    if d in {primitive(z) for z in z_dirs}:
        return True, None
    return False, separating_pair(z_dirs, point)


def witness_to_json(w: WitnessPair) -> str:
    return json.dumps(w.to_json_dict())
