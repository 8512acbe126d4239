"""Exact arithmetic in the idempotent semiring of integer vectors with max/plus.

Elements are all-finite integer vectors over an ordered label set (labels are
the indices 0..size-1), plus a single adjoined bottom element representing the
vector that is minus infinity everywhere.  Addition is entrywise max, with
bottom as the identity; multiplication is entrywise integer sum, with bottom
absorbing.  The vectors of nonnegative degree (entry sum) form the subsemiring
of interest; its unit group is exactly the degree-zero vectors, inverted by
entrywise negation.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional


class LabelMismatchError(ValueError):
    """Raised when two vectors over different label sets are combined."""


class NotAUnitError(ValueError):
    """Raised when inverting a vector of nonzero (or bottom) degree."""


def ext_max(a: Optional[int], b: Optional[int]) -> Optional[int]:
    """Max of two integers extended with None as minus infinity."""
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def ext_add(a: Optional[int], b: Optional[int]) -> Optional[int]:
    """Sum of two integers extended with None as minus infinity (absorbing)."""
    if a is None or b is None:
        return None
    return a + b


class TropVector:
    """An integer vector with max-plus operations, or the bottom element.

    Instances are immutable and hashable; all operations return new vectors.
    ``entries`` is a tuple of ints, or None for bottom.
    """

    __slots__ = ("entries", "size")

    def __init__(self, entries: Iterable[int] | None, size: int | None = None):
        if entries is None:
            if size is None:
                raise ValueError("bottom vector needs an explicit size")
            object.__setattr__(self, "entries", None)
            object.__setattr__(self, "size", size)
        else:
            tup = tuple(int(e) for e in entries)
            if size is not None and size != len(tup):
                raise ValueError("size disagrees with number of entries")
            object.__setattr__(self, "entries", tup)
            object.__setattr__(self, "size", len(tup))
        if self.size == 0:
            raise ValueError("empty label sets are not supported")

    def __setattr__(self, name, value):
        raise AttributeError("TropVector is immutable")

    @classmethod
    def bottom(cls, size: int) -> "TropVector":
        return cls(None, size)

    @property
    def is_bottom(self) -> bool:
        return self.entries is None

    def _check_labels(self, other: "TropVector") -> None:
        if self.size != other.size:
            raise LabelMismatchError(
                f"label sets differ: size {self.size} vs {other.size}")

    def __add__(self, other: "TropVector") -> "TropVector":
        """Entrywise max; bottom is the identity."""
        if not isinstance(other, TropVector):
            return NotImplemented
        self._check_labels(other)
        if self.is_bottom:
            return other
        if other.is_bottom:
            return self
        return TropVector(map(max, self.entries, other.entries))

    def __mul__(self, other: "TropVector") -> "TropVector":
        """Entrywise sum; bottom is absorbing."""
        if not isinstance(other, TropVector):
            return NotImplemented
        self._check_labels(other)
        if self.is_bottom or other.is_bottom:
            return TropVector.bottom(self.size)
        return TropVector(a + b for a, b in zip(self.entries, other.entries))

    @property
    def degree(self) -> Optional[int]:
        """Entry sum, or None (minus infinity) for bottom."""
        if self.is_bottom:
            return None
        return sum(self.entries)

    @property
    def is_pos(self) -> bool:
        """Membership in the nonnegative-degree subsemiring (bottom included)."""
        return self.is_bottom or self.degree >= 0

    @property
    def is_unit(self) -> bool:
        return not self.is_bottom and self.degree == 0

    def inverse(self) -> "TropVector":
        """Entrywise negation; defined exactly on degree-zero vectors."""
        if not self.is_unit:
            raise NotAUnitError(f"not invertible: degree {self.degree}")
        return TropVector(-e for e in self.entries)

    def decompose(self, a1: int, a2: int) -> tuple["TropVector", "TropVector"]:
        """Split into two degree-zero vectors whose max is this vector.

        The first part lowers entry ``a1`` by the degree, the second lowers
        ``a2``; requires two distinct labels and a non-bottom vector.
        """
        if self.is_bottom:
            raise ValueError("cannot decompose the bottom element")
        if self.size < 2:
            raise ValueError("decomposition needs at least two labels")
        if a1 == a2:
            raise ValueError("decomposition labels must differ")
        d = self.degree
        if d < 0:
            raise ValueError("decomposition into units needs nonnegative degree")
        e1 = list(self.entries)
        e1[a1] -= d
        e2 = list(self.entries)
        e2[a2] -= d
        return TropVector(e1), TropVector(e2)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TropVector)
                and self.size == other.size
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.size, self.entries))

    def __getitem__(self, a: int) -> int:
        if self.is_bottom:
            raise ValueError("bottom has no finite entries")
        return self.entries[a]

    def __iter__(self) -> Iterator[int]:
        if self.is_bottom:
            raise ValueError("bottom has no finite entries")
        return iter(self.entries)

    def __repr__(self) -> str:
        if self.is_bottom:
            return f"TropVector.bottom({self.size})"
        return f"TropVector({list(self.entries)})"

    def to_json(self):
        """JSON form: list of ints in label order, or the string "-inf"."""
        if self.is_bottom:
            return "-inf"
        return list(self.entries)

    @classmethod
    def from_json(cls, data, size: int | None = None) -> "TropVector":
        if data == "-inf":
            if size is None:
                raise ValueError("bottom needs an explicit size")
            return cls.bottom(size)
        return cls(data, size)


def zero_unit(size: int) -> TropVector:
    """The multiplicative identity: the all-zero vector."""
    return TropVector([0] * size)
