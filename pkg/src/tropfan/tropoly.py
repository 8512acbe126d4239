"""Boolean Laurent polynomial functions: max of integer linear forms on R^n.

A polynomial is a finite set of integer exponent vectors; the function it
defines sends x to the max of the inner products u . x.  Two polynomials
define the same function on all of R^n exactly when their canonical forms
(the vertex sets of the convex hulls of their exponent sets) coincide, and
the same function on a union of rays exactly when they agree at one point
per ray.  Everything here is exact: hull redundancy is decided by rational
linear feasibility, never by sampling.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exactlp import in_convex_hull, strict_separator
from .maxplus import TropVector

Monomial = tuple[int, ...]


class PolySyntaxError(ValueError):
    """Parse failure; carries the 0-based offset into the input text."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class TropPoly:
    """A Boolean Laurent polynomial as a set of integer exponent vectors.

    The empty set is the distinguished zero polynomial (the constant minus
    infinity); it participates in the semiring operations but is rejected by
    the function-equality deciders.
    """

    __slots__ = ("dim", "monomials")

    def __init__(self, dim: int, monomials: Iterable[Sequence[int]]):
        if dim < 1:
            raise ValueError("ambient dimension must be positive")
        mono = frozenset(tuple(int(e) for e in u) for u in monomials)
        for u in mono:
            if len(u) != dim:
                raise ValueError(f"exponent vector {u} has length != {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "monomials", mono)

    def __setattr__(self, name, value):
        raise AttributeError("TropPoly is immutable")

    @classmethod
    def zero(cls, dim: int) -> "TropPoly":
        return cls(dim, ())

    @classmethod
    def one(cls, dim: int) -> "TropPoly":
        """The multiplicative identity: the single zero exponent."""
        return cls(dim, [(0,) * dim])

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    def __add__(self, other: "TropPoly") -> "TropPoly":
        self._check_dim(other)
        return TropPoly(self.dim, self.monomials | other.monomials)

    def __mul__(self, other: "TropPoly") -> "TropPoly":
        self._check_dim(other)
        return TropPoly(self.dim, (tuple(a + b for a, b in zip(u, v))
                                   for u in self.monomials for v in other.monomials))

    def _check_dim(self, other: "TropPoly") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, TropPoly)
                and self.dim == other.dim
                and self.monomials == other.monomials)

    def __hash__(self) -> int:
        return hash((self.dim, self.monomials))

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials)

    def __repr__(self) -> str:
        return f"TropPoly({self.dim}, {self.sorted_monomials()})"

    def eval(self, point: Sequence) -> Optional[Fraction | int]:
        """Max over monomials of u . point; None (minus infinity) for zero."""
        if len(point) != self.dim:
            raise ValueError(f"point has length {len(point)}, expected {self.dim}")
        if self.is_zero:
            return None
        return max(sum(e * p for e, p in zip(u, point)) for u in self.monomials)

    def canonical(self) -> "TropPoly":
        """Drop every exponent that is a convex combination of the others.

        The survivors are the vertex set of the exponent hull; the defined
        function is unchanged, and two polynomials define the same function
        on R^n iff their canonical forms are equal as sets.
        """
        if self.is_zero:
            raise ValueError("the zero polynomial has no canonical exponent set")
        mono = self.sorted_monomials()
        keep = [u for u in mono
                if not in_convex_hull(u, [v for v in mono if v != u])]
        return TropPoly(self.dim, keep)

    def to_json(self) -> list[list[int]]:
        return [list(u) for u in self.sorted_monomials()]

    @classmethod
    def from_json(cls, data, dim: int) -> "TropPoly":
        return cls(dim, data)


_VAR = re.compile(r"x([1-9][0-9]*)")
_INT = re.compile(r"[+-]?[0-9]+")


def parse_poly(text: str, dim: int) -> TropPoly:
    """Parse the monomial grammar: terms joined by '+', factors by '*'.

    A factor is x<i> or x<i>^<e> with e a signed integer (default 1); the
    lone token 0 denotes the zero exponent vector.  Whitespace is ignored
    between any two tokens.  Raises PolySyntaxError with a position, or
    ValueError for a variable index outside 1..dim.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def peek() -> str:
        return text[pos] if pos < n else ""

    def parse_factor(expo: list[int]):
        nonlocal pos
        m = _VAR.match(text, pos)
        if not m:
            raise PolySyntaxError("expected a variable factor", pos)
        i = int(m.group(1))
        if not 1 <= i <= dim:
            raise ValueError(f"variable x{i} outside 1..{dim} (at position {pos})")
        pos = m.end()
        skip_ws()
        e = 1
        if peek() == "^":
            pos += 1
            skip_ws()
            m = _INT.match(text, pos)
            if not m:
                raise PolySyntaxError("expected an integer exponent after '^'", pos)
            e = int(m.group(0))
            pos = m.end()
        expo[i - 1] += e

    def parse_monomial() -> Monomial:
        nonlocal pos
        skip_ws()
        if peek() == "0":
            pos += 1
            return (0,) * dim
        expo = [0] * dim
        parse_factor(expo)
        while True:
            skip_ws()
            if peek() == "*":
                pos += 1
                skip_ws()
                parse_factor(expo)
            else:
                return tuple(expo)

    monomials = [parse_monomial()]
    while True:
        skip_ws()
        if pos >= n:
            break
        if peek() != "+":
            raise PolySyntaxError("expected '+' between monomials", pos)
        pos += 1
        monomials.append(parse_monomial())
    return TropPoly(dim, monomials)


def fn_eq_on_space(f: TropPoly, g: TropPoly) -> bool:
    """Equality of the induced functions on all of R^n (exact)."""
    f._check_dim(g)
    if f.is_zero or g.is_zero:
        raise ValueError("function equality is defined for nonzero polynomials")
    return f.canonical().monomials == g.canonical().monomials


def separating_point(f: TropPoly, g: TropPoly) -> Optional[tuple[Fraction, ...]]:
    """A rational point where f and g differ, or None when they agree on R^n.

    The certificate comes from a strict-separation LP: some canonical
    exponent of one polynomial lies outside the other's exponent hull.
    """
    f._check_dim(g)
    cf = f.canonical()
    cg = g.canonical()
    if cf.monomials == cg.monomials:
        return None
    for u_side, other in ((cf, g), (cg, f)):
        verts = other.sorted_monomials()
        for u in u_side.sorted_monomials():
            if u in other.monomials:
                continue
            w = strict_separator(u, verts)
            if w is not None:
                return tuple(w)
    raise AssertionError("distinct hulls must admit a separating vertex")


def fn_eq_on_rays(f: TropPoly, g: TropPoly,
                  directions: Iterable[Sequence[int]]) -> bool:
    """Equality of the functions on the union of the rays spanned by the
    given directions (plus the origin, where every polynomial takes 0).

    Agreement along a whole ray is equivalent to agreement at any single
    point of it, so one exact evaluation per direction decides.
    """
    f._check_dim(g)
    if f.is_zero or g.is_zero:
        raise ValueError("function equality is defined for nonzero polynomials")
    for d in directions:
        d = tuple(int(e) for e in d)
        if not any(d):
            raise ValueError("invalid ray: zero direction vector")
        if f.eval(d) != g.eval(d):
            return False
    return True


def substitute_units(f: TropPoly, units: Sequence[TropVector]) -> TropVector:
    """Evaluate f at a tuple of max-plus vectors, entrywise per label.

    The value at label a is f applied to the a-th entries of the inputs;
    this is exactly substitution of invertible elements for the variables.
    The zero polynomial maps to bottom.
    """
    if len(units) != f.dim:
        raise ValueError(f"expected {f.dim} vectors, got {len(units)}")
    size = units[0].size
    for u in units:
        if u.is_bottom:
            raise ValueError("substitution needs finite (invertible) vectors")
        if u.size != size:
            raise ValueError("vectors live over different label sets")
    if f.is_zero:
        return TropVector.bottom(size)
    return TropVector(f.eval([u[a] for u in units]) for a in range(size))
