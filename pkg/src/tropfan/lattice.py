"""Exact integer-lattice algorithms: Hermite normal form, membership, solving.

All matrices are lists/tuples of equal-length int rows.  The Hermite form used
throughout is the row style: row echelon, positive pivots, and every entry
above a pivot reduced into [0, pivot).  That form is the unique canonical
basis of the row lattice, so lattices compare by structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

IntRow = tuple[int, ...]
IntMatrix = tuple[IntRow, ...]


class LatticeSolveError(ValueError):
    """A target row is not in the integer row span; carries the row index."""

    def __init__(self, row_index: int, message: str | None = None):
        self.row_index = row_index
        super().__init__(message or f"target row {row_index} is not in the lattice")


class LatticeSpanError(ValueError):
    """A row is outside even the rational span of the lattice."""


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _as_matrix(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    out = [[int(e) for e in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("rows have unequal lengths")
    return out


def hnf(rows: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form with transform: returns (H, U), H = U * rows.

    U is unimodular (|det| = 1).  H is in canonical row HNF: echelon with
    positive pivots, entries above each pivot reduced into [0, pivot), zero
    rows at the bottom.
    """
    H = _as_matrix(rows)
    m = len(H)
    k = len(H[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for col in range(k):
        if r == m:
            break
        # Fold the column below row r down to its gcd in row r.
        for i in range(r + 1, m):
            if H[i][col] == 0:
                continue
            a, b = H[r][col], H[i][col]
            g, x, y = xgcd(a, b)
            ag, mbg = a // g, -(b // g)
            for M in (H, U):
                Mr, Mi = M[r], M[i]
                for j in range(len(Mr)):
                    s, t = Mr[j], Mi[j]
                    Mr[j] = x * s + y * t
                    Mi[j] = mbg * s + ag * t
        if H[r][col] == 0:
            continue
        if H[r][col] < 0:
            H[r] = [-e for e in H[r]]
            U[r] = [-e for e in U[r]]
        p = H[r][col]
        for i in range(r):
            q = H[i][col] // p
            if q:
                H[i] = [e - q * f for e, f in zip(H[i], H[r])]
                U[i] = [e - q * f for e, f in zip(U[i], U[r])]
        r += 1
    Ht = tuple(tuple(row) for row in H)
    Ut = tuple(tuple(row) for row in U)
    return Ht, Ut


def _pivots(H: IntMatrix) -> list[tuple[int, int]]:
    """(row, col) of each nonzero row's leading entry."""
    out = []
    for i, row in enumerate(H):
        for j, e in enumerate(row):
            if e:
                out.append((i, j))
                break
    return out


def _reduce_against(H: IntMatrix, v: Sequence[int], exact: bool):
    """Forward-substitute v against echelon H.

    Returns (coeffs, residue): coeffs has one entry per row of H (zero for
    zero rows).  With exact=True coefficients are ints and None is returned
    instead when an entry fails to divide; with exact=False they are
    Fractions and only rational-span failure leaves a nonzero residue.
    """
    vv = [Fraction(e) if not exact else int(e) for e in v]
    coeffs = [0 if exact else Fraction(0)] * len(H)
    for i, j in _pivots(H):
        p = H[i][j]
        if exact:
            if vv[j] % p != 0:
                return None, vv
            q = vv[j] // p
        else:
            q = Fraction(vv[j], p)
        if q:
            vv = [e - q * f for e, f in zip(vv, H[i])]
        coeffs[i] = q
    return coeffs, vv


class Lattice:
    """A subgroup of Z^m stored by its canonical row-HNF basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, basis: IntMatrix):
        self.ambient = ambient
        self.basis = basis

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ambient: int | None = None) -> "Lattice":
        rows = _as_matrix(rows)
        if ambient is None:
            if not rows:
                raise ValueError("ambient dimension needed for an empty generator list")
            ambient = len(rows[0])
        if rows and len(rows[0]) != ambient:
            raise ValueError("generator length disagrees with ambient dimension")
        H, _ = hnf(rows)
        basis = tuple(row for row in H if any(row))
        return cls(ambient, basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def member(self, v: Sequence[int]) -> Optional[tuple[int, ...]]:
        """Coefficients c with c . basis = v, or None if v is not in the lattice."""
        if len(v) != self.ambient:
            raise ValueError("vector length disagrees with ambient dimension")
        if not self.basis:
            return () if not any(v) else None
        coeffs, residue = _reduce_against(self.basis, v, exact=True)
        if coeffs is None or any(residue):
            return None
        return tuple(coeffs)

    def __contains__(self, v) -> bool:
        return self.member(v) is not None

    def least_multiplier(self, v: Sequence[int]) -> int:
        """Least positive s with s*v in the lattice.

        Raises LatticeSpanError when v is outside the rational span (no such
        s exists).  The set of all valid s is exactly (result)*Z.
        """
        if len(v) != self.ambient:
            raise ValueError("vector length disagrees with ambient dimension")
        if not any(v):
            return 1
        if not self.basis:
            raise LatticeSpanError("nonzero vector against the zero lattice")
        coeffs, residue = _reduce_against(self.basis, v, exact=False)
        if any(residue):
            raise LatticeSpanError("vector is outside the rational span of the lattice")
        lcm = 1
        for q in coeffs:
            d = q.denominator
            lcm = lcm // _gcd(lcm, d) * d
        return lcm

    def __eq__(self, other) -> bool:
        return (isinstance(other, Lattice)
                and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Lattice(ambient={self.ambient}, basis={[list(r) for r in self.basis]})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def solve_int(rows: Sequence[Sequence[int]], targets: Sequence[Sequence[int]]) -> IntMatrix:
    """Solve T * rows = targets over the integers, canonically.

    Returns the T whose free coefficients (relative to the HNF of ``rows``)
    are zero; this makes the solution deterministic and linear in the
    targets.  Raises LatticeSolveError naming the first failing target row.
    """
    M = _as_matrix(rows)
    if not M:
        raise ValueError("need at least one generator row")
    H, U = hnf(M)
    T = []
    for idx, v in enumerate(targets):
        if len(v) != len(M[0]):
            raise ValueError(f"target row {idx} has wrong length")
        y, residue = _reduce_against(H, v, exact=True)
        if y is None or any(residue):
            raise LatticeSolveError(idx)
        # c . rows = (y . U) . rows = y . H = v
        c = [sum(y[i] * U[i][j] for i in range(len(M))) for j in range(len(M))]
        T.append(tuple(c))
    return tuple(T)


def scalar_modulus(base_rows: Sequence[Sequence[int]], lattice: Lattice) -> int:
    """Least positive e with every row of e*base in the lattice.

    The set of all working scalars is a subgroup of Z, so it equals e*Z.
    Raises LatticeSpanError when some row is outside the rational span.
    """
    e = 1
    for row in base_rows:
        s = lattice.least_multiplier(row)
        e = e // _gcd(e, s) * s
    return e
