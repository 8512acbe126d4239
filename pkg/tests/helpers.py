"""Shared fixtures-in-plain-code for the test suite: the two reference fans,
their generator matrices, and small random-object generators."""

from fractions import Fraction

from tropfan import Fan1D, GenMatrix, Lattice, Ray, TropPoly

# A balanced 5-ray fan in R^3 (the last ray carries weight 4) and a balanced
# 3-ray fan in R^2; their evaluation matrices drive most worked examples.
FAN_X = Fan1D(3, [Ray([1, 0, 1]), Ray([-1, 0, 1]), Ray([0, 1, 1]),
                  Ray([0, -1, 1]), Ray([0, 0, -1], 4)])
FAN_Y = Fan1D(2, [Ray([1, 1], 1), Ray([-1, 1], 2), Ray([1, -3], 1)])

MF_ROWS = ((1, -1, 0, 0, 0), (0, 0, 1, -1, 0), (1, 1, 1, 1, -4))
MG_ROWS = ((1, -2, 1), (1, 2, -3))

B1 = ((1, -1, 0), (0, 0, 0), (1, 1, -2))
B2 = ((0, 0, 0), (1, -1, 0), (1, 1, -2))


def genmatrix_x() -> GenMatrix:
    return GenMatrix.from_matrix(MF_ROWS)


def genmatrix_y() -> GenMatrix:
    return GenMatrix.from_matrix(MG_ROWS)


def lattice_y() -> Lattice:
    return Lattice.from_rows(MG_ROWS)


def permute_columns(matrix, perm):
    return tuple(tuple(row[j] for j in perm) for row in matrix)


def column_permutations(matrix):
    import itertools
    k = len(matrix[0])
    return {permute_columns(matrix, p) for p in itertools.permutations(range(k))}


def scale_matrix(matrix, s):
    return tuple(tuple(s * e for e in row) for row in matrix)


def random_int_vector(rng, n, lo=-4, hi=4):
    return tuple(rng.randint(lo, hi) for _ in range(n))


def random_degree_zero_row(rng, n, bound=3):
    while True:
        head = [rng.randint(-bound, bound) for _ in range(n - 1)]
        last = -sum(head)
        if abs(last) <= bound:
            return tuple(head + [last])


def random_poly(rng, dim, max_monos=5, bound=3) -> TropPoly:
    k = rng.randint(1, max_monos)
    return TropPoly(dim, [random_int_vector(rng, dim, -bound, bound) for _ in range(k)])


def random_rational(rng, den_bound=10) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, den_bound))


def random_rational_point(rng, n, den_bound=10):
    return tuple(random_rational(rng, den_bound) for _ in range(n))


def random_primitive_direction(rng, n, bound=4):
    from tropfan import primitive
    while True:
        v = random_int_vector(rng, n, -bound, bound)
        if any(v):
            return primitive(v)


def box_hom_oracle(source: GenMatrix, target_size: int, lattice, bound: int):
    """Independent enumeration of every integer matrix with entries in
    [-bound, bound] whose rows sum to zero, whose columns are nonnegative
    multiples of source columns, and whose rows lie in the lattice.

    Works straight from the definition: the integer nonnegative multiples of
    a column are exactly the nonnegative integer multiples of its primitive
    direction, so candidate columns are enumerated per direction and the
    remaining two conditions are checked on every combination.
    """
    import itertools
    from tropfan import primitive

    candidates = {(0,) * source.n}
    for a in range(source.n_labels):
        col = source.column(a)
        if not any(col):
            continue
        p = primitive(col)
        k = 1
        while k * max(abs(e) for e in p) <= bound:
            candidates.add(tuple(k * e for e in p))
            k += 1
    out = set()
    for cols in itertools.product(sorted(candidates), repeat=target_size):
        M = tuple(tuple(c[i] for c in cols) for i in range(source.n))
        if any(sum(row) for row in M):
            continue
        if lattice is not None and not all(row in lattice for row in M):
            continue
        out.add(M)
    return out
