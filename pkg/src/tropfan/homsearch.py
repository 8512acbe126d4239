"""Enumerate all semiring homomorphisms between Laurent-generated
subsemirings of max-plus vector semirings, as finite families of integer
matrices, and convert them to fan-morphism matrices.

A homomorphism out of the subsemiring generated by the rows of a generator
matrix is determined by the images of those rows; stacking the images gives
an integer matrix whose rows sum to zero and whose every column is a
nonnegative rational multiple of a source column ("geometric").  Restricting
the codomain to a subsemiring adds a lattice-membership condition on the
rows.  The enumerator iterates column-assignment patterns, computes the
extreme rays of each pattern's scaling cone exactly, and packages each
one-dimensional cone as a single-parameter family: a primitive base matrix
together with the scalar modulus forced by the target lattice.  Cones of
dimension two or more are reported verbatim as cone records and flag the
result inexhaustive.
"""

from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from .cones import extreme_rays
from .fan import Fan1D, GenMatrix, check_balancing, primitive, weighted_eval_map
from .lattice import Lattice, LatticeSpanError, scalar_modulus, solve_int
from .maxplus import TropVector
from .tropoly import TropPoly, substitute_units

IntMatrix = tuple[tuple[int, ...], ...]
Assignment = tuple[Optional[int], ...]


class NotGeometricError(ValueError):
    """Images admit no homomorphism: some column matches no source column."""


def _matrix_gcd(M: IntMatrix) -> int:
    g = 0
    for row in M:
        for e in row:
            g = gcd(g, e)
    return g


def _scale_matrix(M: IntMatrix, s: int) -> IntMatrix:
    return tuple(tuple(s * e for e in row) for row in M)


def geometric_check(images: Sequence[TropVector],
                    source: GenMatrix) -> Optional[list[tuple[Optional[int], Fraction]]]:
    """Per-target-label witnesses (source label, scale) for the image columns.

    Column b of the stacked images must equal t * (column a of the source)
    for some label a and rational t >= 0.  Zero columns are reported as
    (None, 0); otherwise the lowest matching label is chosen.  Returns None
    when some column matches nothing.
    """
    rows = list(images)
    if len(rows) != source.n:
        raise ValueError(f"expected {source.n} image rows, got {len(rows)}")
    size = rows[0].size
    for img in rows:
        if img.is_bottom:
            raise ValueError("image rows must be finite vectors")
        if img.size != size:
            raise ValueError("image rows live over different label sets")
    src_cols = source.columns()
    witnesses = []
    for b in range(size):
        col = tuple(img[b] for img in rows)
        if not any(col):
            witnesses.append((None, Fraction(0)))
            continue
        found = None
        for a, sc in enumerate(src_cols):
            i = next((i for i, e in enumerate(sc) if e), None)
            if i is None:
                continue
            t = Fraction(col[i], sc[i])
            if t > 0 and all(col[j] == t * sc[j] for j in range(len(col))):
                found = (a, t)
                break
        if found is None:
            return None
        witnesses.append(found)
    return witnesses


@dataclass(frozen=True)
class HomFamily:
    """The one-parameter matrix set {s * base : s a positive multiple of
    modulus}; base is primitive (entry gcd 1) and columns follow assignment."""

    assignment: Assignment
    base: IntMatrix
    modulus: int

    @property
    def minimal_member(self) -> IntMatrix:
        return _scale_matrix(self.base, self.modulus)

    def matrix_for(self, s: int) -> IntMatrix:
        if s <= 0 or s % self.modulus:
            raise ValueError(f"parameter must be a positive multiple of {self.modulus}")
        return _scale_matrix(self.base, s)

    def expand(self, entry_bound: int) -> Iterator[IntMatrix]:
        """Members whose entries all have absolute value <= entry_bound."""
        big = max(abs(e) for row in self.base for e in row)
        s = self.modulus
        while s * big <= entry_bound:
            yield _scale_matrix(self.base, s)
            s += self.modulus

    def sort_key(self):
        return (_assignment_key(self.assignment), self.base)


@dataclass(frozen=True)
class ConeRecord:
    """Escape hatch for assignments whose scaling cone is not a single ray:
    the extreme-ray base matrices are listed, moduli deferred."""

    assignment: Assignment
    ray_bases: tuple[IntMatrix, ...]

    def sort_key(self):
        return _assignment_key(self.assignment)


def _assignment_key(assignment: Assignment) -> tuple[int, ...]:
    return tuple(-1 if a is None else a for a in assignment)


def _direction_classes(source: GenMatrix) -> list[tuple[int, tuple[int, ...]]]:
    """(lowest label, primitive direction) per distinct nonzero column
    direction, in order of first appearance."""
    reps = []
    seen = set()
    for a in range(source.n_labels):
        col = source.column(a)
        if not any(col):
            continue
        p = primitive(col)
        if p not in seen:
            seen.add(p)
            reps.append((a, p))
    return reps


def _rays_for_assignment(sigma: Assignment,
                         class_dirs: dict[int, tuple[int, ...]],
                         n: int) -> list[tuple[int, ...]]:
    positions = [b for b, a in enumerate(sigma) if a is not None]
    if not positions:
        return []
    N = [[class_dirs[sigma[b]][i] for b in positions] for i in range(n)]
    return extreme_rays(N, len(positions))


def _ray_worker(args):
    sigmas, class_dirs, n = args
    return [(sigma, _rays_for_assignment(sigma, class_dirs, n)) for sigma in sigmas]


def _matrix_from_ray(sigma: Assignment, ray: Sequence[int],
                     class_dirs: dict[int, tuple[int, ...]], n: int) -> IntMatrix:
    positions = [b for b, a in enumerate(sigma) if a is not None]
    t = {b: ray[k] for k, b in enumerate(positions)}
    M = []
    for i in range(n):
        M.append(tuple(t.get(b, 0) * class_dirs[sigma[b]][i] if sigma[b] is not None else 0
                       for b in range(len(sigma))))
    return tuple(M)


def _tight_assignment(M: IntMatrix, sigma: Assignment) -> Assignment:
    """The canonical assignment of a matrix: Zero where its column vanishes."""
    cols = list(zip(*M))
    return tuple(sigma[b] if any(cols[b]) else None for b in range(len(sigma)))


@dataclass(frozen=True)
class HomEnumeration:
    """Complete answer set: the zero matrix, the single-parameter families,
    and cone records for multi-parameter assignments (if any, the result is
    inexhaustive until expanded by brute force within an entry bound)."""

    n: int
    target_size: int
    source: GenMatrix
    target_lattice: Optional[Lattice]
    families: tuple[HomFamily, ...]
    cone_records: tuple[ConeRecord, ...]

    @property
    def inexhaustive(self) -> bool:
        return bool(self.cone_records)

    @property
    def zero_matrix(self) -> IntMatrix:
        return tuple((0,) * self.target_size for _ in range(self.n))

    def expand_families(self, entry_bound: int) -> set[IntMatrix]:
        """Zero matrix plus all family members within the entry bound."""
        out = {self.zero_matrix}
        for fam in self.families:
            out.update(fam.expand(entry_bound))
        return out

    def expand_cones(self, entry_bound: int) -> set[IntMatrix]:
        """Brute-force integer members of the recorded cones within the
        entry bound (lattice condition applied)."""
        out: set[IntMatrix] = set()
        class_dirs = dict(_direction_classes(self.source))
        for rec in self.cone_records:
            positions = [b for b, a in enumerate(rec.assignment) if a is not None]
            prims = [class_dirs[rec.assignment[b]] for b in positions]
            limits = [entry_bound // max(abs(e) for e in p) for p in prims]
            for ks in itertools.product(*(range(lim + 1) for lim in limits)):
                M = _matrix_from_ray(rec.assignment, ks, class_dirs, self.n)
                if any(sum(row) for row in M):
                    continue
                if self.target_lattice is not None and not all(
                        row in self.target_lattice for row in M):
                    continue
                out.add(M)
        out.discard(self.zero_matrix)
        return out

    def expand(self, entry_bound: int) -> set[IntMatrix]:
        """The exact set of homomorphism matrices with entries in
        [-entry_bound, entry_bound]; exact even for inexhaustive results,
        because cone records are completed by brute force within the bound."""
        return self.expand_families(entry_bound) | self.expand_cones(entry_bound)

    def to_json_lines(self) -> list[str]:
        lines = [json.dumps({"kind": "zero"})]
        for fam in self.families:
            lines.append(json.dumps({
                "kind": "family",
                "assignment": _assignment_json(fam.assignment),
                "base": [list(r) for r in fam.base],
                "modulus": fam.modulus,
            }))
        for rec in self.cone_records:
            lines.append(json.dumps({
                "kind": "cone",
                "rays": [[list(r) for r in M] for M in rec.ray_bases],
                "flag": "inexhaustive",
            }))
        return lines


def _assignment_json(assignment: Assignment) -> list:
    return [None if a is None else a + 1 for a in assignment]


def _chunked(iterable, size):
    it = iter(iterable)
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def enumerate_homs(source: GenMatrix, target_size: int,
                   target_lattice: Optional[Lattice] = None,
                   jobs: int = 1) -> HomEnumeration:
    """All homomorphism matrices out of the subsemiring generated by the
    source rows, into the full target of the given label count or into the
    subsemiring cut out by the target lattice.

    Column-assignment patterns are iterated in lexicographic order (the
    zero marker first, then direction-class representatives); identical
    primitive base matrices arising from several patterns are merged; the
    output is deterministically sorted, so any job count yields identical
    results.
    """
    if target_size < 1:
        raise ValueError("target label count must be positive")
    if target_lattice is not None and target_lattice.ambient != target_size:
        raise ValueError("target lattice ambient disagrees with target size")
    n = source.n
    reps = _direction_classes(source)
    class_dirs = dict(reps)
    options: list[Optional[int]] = [None] + [a for a, _ in reps]
    sigmas = itertools.product(options, repeat=target_size)

    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            tasks = ((chunk, class_dirs, n) for chunk in _chunked(sigmas, 256))
            results = [pair for batch in pool.map(_ray_worker, tasks)
                       for pair in batch]
    else:
        results = [(sigma, _rays_for_assignment(sigma, class_dirs, n))
                   for sigma in sigmas]

    families: dict[IntMatrix, HomFamily] = {}
    records: list[ConeRecord] = []
    for sigma, rays in results:
        if not rays:
            continue
        if len(rays) > 1:
            bases = tuple(sorted(_matrix_from_ray(sigma, r, class_dirs, n)
                                 for r in rays))
            records.append(ConeRecord(sigma, bases))
            continue
        M0 = _matrix_from_ray(sigma, rays[0], class_dirs, n)
        if M0 in families:
            continue
        assert _matrix_gcd(M0) == 1  # primitive ray => primitive matrix
        if target_lattice is None:
            modulus = 1
        else:
            try:
                modulus = scalar_modulus(M0, target_lattice)
            except LatticeSpanError:
                continue
        families[M0] = HomFamily(_tight_assignment(M0, sigma), M0, modulus)

    fams = tuple(sorted(families.values(), key=HomFamily.sort_key))
    recs = tuple(sorted(records, key=ConeRecord.sort_key))
    return HomEnumeration(n, target_size, source, target_lattice, fams, recs)


class Hom:
    """A concrete homomorphism, held as the images of the generator rows.

    Elements of the source subsemiring are presented as polynomial
    expressions in the generators; applying the homomorphism substitutes
    the image rows into the expression.
    """

    __slots__ = ("source", "images", "witnesses")

    def __init__(self, source: GenMatrix, images: Sequence[TropVector],
                 witnesses: list[tuple[Optional[int], Fraction]]):
        self.source = source
        self.images = tuple(images)
        self.witnesses = witnesses

    def __call__(self, f: TropPoly) -> TropVector:
        return substitute_units(f, self.images)

    def __repr__(self) -> str:
        return f"Hom(images={[v.to_json() for v in self.images]})"


def hom_from_images(images: Sequence[TropVector], source: GenMatrix) -> Hom:
    """The unique homomorphism sending generator i to images[i].

    Existence requires (and is guaranteed by) the geometric condition on the
    image columns; otherwise NotGeometricError is raised because no
    homomorphism has those images.
    """
    witnesses = geometric_check(images, source)
    if witnesses is None:
        raise NotGeometricError(
            "no homomorphism: some image column is not a nonnegative multiple "
            "of a source column")
    hom = Hom(source, images, witnesses)
    if geometric_check(hom.images, source) is None:
        raise AssertionError("post-construction geometric re-check failed")
    return hom


def apply_functor(T: Sequence[Sequence[int]], target_gens: GenMatrix) -> tuple[TropVector, ...]:
    """Images induced by an integer matrix: row i of T * (generator rows)."""
    m = target_gens.n
    G = target_gens.matrix()
    images = []
    for row in T:
        if len(row) != m:
            raise ValueError(f"matrix row has length {len(row)}, expected {m}")
        entries = [sum(row[j] * G[j][b] for j in range(m))
                   for b in range(target_gens.n_labels)]
        images.append(TropVector(entries))
    return tuple(images)


def recover_T(images: Sequence[TropVector], target_gens: GenMatrix) -> IntMatrix:
    """The integer matrix T with T * (generator rows) = image rows.

    The canonical solution (free coefficients zero) is returned, making the
    recovery linear in the images; LatticeSolveError identifies the first
    image row outside the generator lattice.
    """
    rows = []
    for img in images:
        if img.is_bottom:
            raise ValueError("image rows must be finite vectors")
        rows.append(img.entries)
    return solve_int(target_gens.matrix(), rows)


@dataclass(frozen=True)
class MorphismFamily:
    """The matrix set {k * base_T : k a positive integer} of linear maps
    carrying one fan's support into the other's."""

    assignment: Assignment
    base_T: IntMatrix

    def matrix_for(self, k: int) -> IntMatrix:
        if k <= 0:
            raise ValueError("parameter must be a positive integer")
        return _scale_matrix(self.base_T, k)

    def sort_key(self):
        return (_assignment_key(self.assignment), self.base_T)


@dataclass(frozen=True)
class MorphismEnumeration:
    """All linear maps defining morphisms from one fan to another: the zero
    map, T-families, and any propagated cone records."""

    homs: HomEnumeration
    target_gens: GenMatrix
    families: tuple[MorphismFamily, ...]

    @property
    def cone_records(self) -> tuple[ConeRecord, ...]:
        return self.homs.cone_records

    @property
    def inexhaustive(self) -> bool:
        return self.homs.inexhaustive

    def expand_T(self, bound: int) -> set[IntMatrix]:
        """Zero map plus explicit members: family parameters up to the
        bound, and cone-record image matrices with entries within the bound
        (lattice-filtered) rewritten in source-generator coordinates."""
        m = self.target_gens.n
        out = {tuple((0,) * m for _ in range(self.homs.n))}
        for fam in self.families:
            for k in range(1, bound + 1):
                out.add(fam.matrix_for(k))
        for M in self.homs.expand_cones(bound):
            out.add(recover_T([TropVector(row) for row in M], self.target_gens))
        return out

    def to_json_lines(self) -> list[str]:
        lines = [json.dumps({"kind": "zero"})]
        for fam in self.families:
            lines.append(json.dumps({
                "kind": "family",
                "assignment": _assignment_json(fam.assignment),
                "base_T": [list(r) for r in fam.base_T],
            }))
        for rec in self.cone_records:
            lines.append(json.dumps({
                "kind": "cone",
                "rays": [[list(r) for r in M] for M in rec.ray_bases],
                "flag": "inexhaustive",
            }))
        return lines


def enumerate_morphisms(from_fan: Fan1D, to_fan: Fan1D, jobs: int = 1) -> MorphismEnumeration:
    """All integer matrices defining morphisms from one 1-dimensional fan to
    another, as single-parameter families plus the zero map.

    Homomorphisms run contravariantly: the source generators come from the
    destination fan, the target lattice from the origin fan.  Unbalanced
    fans are allowed with a warning (the enumeration uses only the generator
    matrices).
    """
    for fan, name in ((from_fan, "source"), (to_fan, "destination")):
        if not check_balancing(fan):
            warnings.warn(f"{name} fan is not balanced; enumeration proceeds "
                          "on its generator matrix", stacklevel=2)
    MF = weighted_eval_map(to_fan)
    MG = weighted_eval_map(from_fan)
    lattice = Lattice.from_rows(MG.matrix())
    enum = enumerate_homs(MF, from_fan.n_rays, lattice, jobs=jobs)
    fams = []
    for fam in enum.families:
        T0 = recover_T([TropVector(r) for r in fam.minimal_member], MG)
        fams.append(MorphismFamily(fam.assignment, T0))
    fams.sort(key=MorphismFamily.sort_key)
    return MorphismEnumeration(enum, MG, tuple(fams))
