import json
import random
from fractions import Fraction

import pytest

from tropfan import (PointInSupportError, TropPoly, WitnessPair, fn_eq_on_rays,
                     fn_eq_on_space, in_congruence_variety, integerize,
                     orth_basis, separating_pair, verify_witness)
from tropfan.lattice import hnf
from tropfan.witness import witness_to_json

from helpers import FAN_X, random_primitive_direction, random_rational_point


class TestIntegerize:
    def test_rational_scaling(self):
        assert integerize((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
        assert integerize((0, Fraction(-5, 3))) == (0, -1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            integerize((0, 0))


class TestOrthBasis:
    def test_plane_examples(self):
        assert orth_basis((0, 1)) == [(1, 0)]
        assert orth_basis((3,)) == []

    def test_full_rank_and_orthogonal(self):
        basis = orth_basis((1, 1, 1))
        assert len(basis) == 2
        for e in basis:
            assert sum(e) == 0
        H, _ = hnf(basis)
        assert sum(1 for row in H if any(row)) == 2

    def test_random_contract(self):
        rng = random.Random(71)
        for _ in range(60):
            n = rng.randint(1, 4)
            p = random_rational_point(rng, n)
            if not any(p):
                continue
            basis = orth_basis(p)
            assert len(basis) == n - 1
            for e in basis:
                assert sum(c * x for c, x in zip(e, p)) == 0
            if basis:
                H, _ = hnf(basis)
                assert sum(1 for row in H if any(row)) == n - 1

    def test_kernel_is_saturated(self):
        # the basis must span the whole integer kernel, not a finite-index
        # sublattice: any integer kernel vector must be an integer combination
        rng = random.Random(73)
        from tropfan import Lattice
        for _ in range(40):
            n = rng.randint(2, 4)
            d = random_primitive_direction(rng, n)
            L = Lattice.from_rows(orth_basis(d))
            for _ in range(20):
                v = tuple(rng.randint(-6, 6) for _ in range(n))
                if sum(a * b for a, b in zip(v, d)) == 0:
                    assert v in L


class TestSeparatingPair:
    def test_worked_example(self):
        w = separating_pair([(1, 0)], (0, 1))
        assert w.direction == (0, 1)
        assert w.basis == ((1, 0),)
        assert w.K == 1
        assert w.f.monomials == {(0, 0), (1, 0), (-1, 0)}
        assert w.g.monomials == w.f.monomials | {(0, 1)}
        assert w.f.eval((1, 0)) == w.g.eval((1, 0)) == 1
        assert w.f.eval((0, 1)) == 0 and w.g.eval((0, 1)) == 1

    def test_degenerate_union(self):
        w = separating_pair([], (1,))
        assert w.f.monomials == {(0,)}
        assert w.g.monomials == {(0,), (1,)}
        assert verify_witness(w, [])

    def test_five_ray_union(self):
        dirs = list(FAN_X.directions)
        w = separating_pair(dirs, (1, 1, 0))
        assert verify_witness(w, dirs)

    def test_point_on_union_rejected(self):
        with pytest.raises(PointInSupportError):
            separating_pair([(1, 0), (0, 1)], (2, 0))
        with pytest.raises(PointInSupportError):
            separating_pair([(1, 1)], (Fraction(1, 2), Fraction(1, 2)))
        with pytest.raises(PointInSupportError):
            separating_pair([(1, 0)], (0, 0))

    def test_opposite_direction_is_off_support(self):
        w = separating_pair([(1, 0)], (-1, 0))
        assert verify_witness(w, [(1, 0)])

    def test_directions_normalized_on_input(self):
        # non-primitive union directions describe the same rays
        w = separating_pair([(3, 0), (0, -7)], (1, 1))
        assert verify_witness(w, [(3, 0), (0, -7)])
        with pytest.raises(PointInSupportError):
            separating_pair([(4, 4)], (1, 1))

    def test_pair_separates_space_but_not_fan(self):
        dirs = list(FAN_X.directions)
        w = separating_pair(dirs, (1, 1, 0))
        assert fn_eq_on_rays(w.f, w.g, dirs)
        assert not fn_eq_on_space(w.f, w.g)

    def test_monotone_in_K(self):
        dirs = [(2, 1), (1, -1), (-1, 0)]
        w = separating_pair(dirs, (1, 3))
        for K in (w.K + 1, 2 * w.K):
            monos = [(0, 0)]
            for e in w.basis:
                monos.append(tuple(K * c for c in e))
                monos.append(tuple(-K * c for c in e))
            f = TropPoly(2, monos)
            g = TropPoly(2, monos + [w.direction])
            assert verify_witness(WitnessPair(f, g, w.point, w.direction,
                                              w.basis, K), dirs)

    def test_f_is_zero_along_the_point_ray(self):
        rng = random.Random(79)
        for _ in range(40):
            n = rng.randint(1, 4)
            dirs = [random_primitive_direction(rng, n) for _ in range(rng.randint(0, 4))]
            p = random_rational_point(rng, n)
            if not any(p):
                continue
            try:
                w = separating_pair(dirs, p)
            except PointInSupportError:
                continue
            assert (0,) * n in w.f.monomials
            assert w.f.eval(p) == 0
            assert w.g.eval(p) > 0


class TestVerifyWitness:
    def test_tampered_K_fails(self):
        dirs = [(1, 1), (1, -2)]
        w = separating_pair(dirs, (1, 0))
        assert w.K > 1  # both directions have positive inner product
        monos = [(0, 0)]
        for e in w.basis:
            monos.append(tuple(0 * c for c in e))
            monos.append(tuple(0 * c for c in e))
        broken = WitnessPair(TropPoly(2, monos),
                             TropPoly(2, monos + [w.direction]),
                             w.point, w.direction, w.basis, 0)
        assert not verify_witness(broken, dirs)

    def test_point_moved_onto_union_fails(self):
        dirs = [(1, 0)]
        w = separating_pair(dirs, (0, 1))
        moved = WitnessPair(w.f, w.g, (Fraction(3), Fraction(0)),
                            w.direction, w.basis, w.K)
        assert not verify_witness(moved, dirs)


class TestCongruenceVariety:
    def test_positive_multiple_inside(self):
        ok, cert = in_congruence_variety((2, 0, 2), [(1, 0, 1), (0, 1, 0)])
        assert ok and cert is None

    def test_negative_multiple_outside_with_witness(self):
        ok, cert = in_congruence_variety((-1, 0, -1), [(1, 0, 1)])
        assert not ok
        assert verify_witness(cert, [(1, 0, 1)])

    def test_origin_always_inside(self):
        ok, cert = in_congruence_variety((0, 0), [])
        assert ok and cert is None

    def test_agrees_with_direct_parallelism(self):
        rng = random.Random(83)
        for _ in range(300):
            n = rng.randint(1, 3)
            dirs = [random_primitive_direction(rng, n) for _ in range(rng.randint(0, 4))]
            q = random_rational_point(rng, n, den_bound=6)
            ok, cert = in_congruence_variety(q, dirs)
            # independent oracle: cross-multiplication parallelism with a
            # nonnegative scale factor
            expected = not any(q)
            if not expected:
                for d in dirs:
                    pairs_ok = all(q[i] * d[j] == q[j] * d[i]
                                   for i in range(n) for j in range(n))
                    i0 = next(i for i in range(n) if d[i])
                    if pairs_ok and q[i0] * d[i0] >= 0:
                        expected = True
                        break
            assert ok == expected
            if not ok:
                assert verify_witness(cert, dirs)


def test_witness_json_shape():
    w = separating_pair([(1, 0)], (Fraction(1, 2), Fraction(3, 2)))
    data = json.loads(witness_to_json(w))
    assert set(data) == {"f", "g", "point", "K"}
    assert data["point"] == ["1/2", "3/2"]
    assert all(isinstance(row, list) for row in data["f"])
    assert isinstance(data["K"], int)
