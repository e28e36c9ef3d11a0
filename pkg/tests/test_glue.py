import random
from fractions import Fraction as F
from itertools import product
from math import comb

import pytest

from tropproj.errors import GlueMismatch
from tropproj.glue import (
    CandidateSet,
    Projection,
    candidate_set,
    choose_vector,
    find_injective_m_slopes,
    find_injective_u_enum,
    glue,
    is_injective,
    pullback,
)
from tropproj.newton import trop_univariate
from tropproj.shapegb import SlimVector, transform_eliminant

P0 = Projection.univariate(0, {F(1): 1, F(2): 2, F(3): 1})
P1 = Projection.univariate(1, {F(0): 1, F(1): 2, F(2): 1})
P2 = Projection.univariate(2, {F(-1): 1, F(0): 2, F(1): 1})
P01 = Projection.from_mapping((0, 1), {(3, 2): 1, (2, 1): 2, (1, 0): 1})
FULL = {(1, 0, -1): 1, (2, 1, 0): 2, (3, 2, 1): 1}


def grid(xs, ys):
    return CandidateSet((0, 1), tuple((F(a), F(b)) for a in xs for b in ys))


def brute_m(X, Y):
    m = 0
    while len({a - m * b for a in X for b in Y}) != len(X) * len(Y):
        m += 1
    return m


class TestProjection:
    def test_normalises(self):
        p = Projection.from_mapping((0, 1), {(2, 1): 2, (1, 0): 1})
        assert p.points == (((F(1), F(0)), 1), ((F(2), F(1)), 2))
        assert p.degree == 3
        assert p.restrict([1]) == {(F(0),): 1, (F(1),): 2}
        assert p.distinct().degree == 2

    @pytest.mark.parametrize("A,pts", [((1, 0), {(1, 2): 1}), ((0,), {(1, 2): 1}),
                                       ((0,), {(1,): 0})])
    def test_rejects(self, A, pts):
        with pytest.raises(ValueError):
            Projection.from_mapping(A, pts)


class TestCandidateSet:
    def test_grid(self):
        T = candidate_set([P0, P1])
        assert T.A == (0, 1)
        assert set(T.elems) == {(F(a), F(b)) for a in (1, 2, 3) for b in (0, 1, 2)}

    def test_inconsistent_overlap(self):
        a = Projection.from_mapping((0, 1), {(0, 0): 1})
        b = Projection.from_mapping((1, 2), {(1, 5): 1})
        assert candidate_set([a, b]).elems == ()

    def test_single_input(self):
        assert candidate_set([P01]).elems == tuple(c for c, _ in P01.points)

    def test_overlapping_join(self):
        b = Projection.from_mapping((1, 2), {(0, -1): 1, (1, 0): 2, (2, 1): 1})
        assert len(candidate_set([P01, b])) == 3

    def test_empty_input(self):
        with pytest.raises(ValueError):
            candidate_set([])


class TestEnum:
    def test_singleton(self):
        T = CandidateSet((0, 1), ((F(1), F(2)),))
        assert find_injective_u_enum(T, 0, 3) == SlimVector.unit(3, 0)

    def test_example_grid(self):
        T = grid((1, 2, 3), (0, 1, 2))
        assert is_injective(T, SlimVector((-1, 3, 0)))
        u = find_injective_u_enum(T, 0, 3)
        assert u == SlimVector((-1, 3, 0))

    def test_small_grid(self):
        T = grid((0, 1), (0, 1))
        assert not is_injective(T, SlimVector((-1, 0, 0)))
        assert not is_injective(T, SlimVector((-1, 1, 0)))
        assert find_injective_u_enum(T, 0, 3).u == (-1, 2, 0)

    def test_concentration_must_be_valid(self):
        with pytest.raises(ValueError):
            find_injective_u_enum(grid((0,), (0,)), 1, 2)

    def test_matches_brute_force(self):
        rng = random.Random(4)
        for _ in range(30):
            k = rng.randint(2, 3)
            T = CandidateSet(tuple(range(k)), tuple(sorted({
                tuple(F(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(k))
                for _ in range(rng.randint(1, 12))})))
            u = find_injective_u_enum(T, 0, k + 1)
            norm = sum(abs(c) for c in u.u)
            # nothing injective with a smaller l1 norm, or earlier in the same shell
            for rest in product(range(norm), repeat=k - 1):
                cand = (-1,) + rest
                l1 = 1 + sum(rest)
                if l1 < norm or (l1 == norm and cand < u.u[:k]):
                    assert not is_injective(T, SlimVector(cand + (0,)))
            assert is_injective(T, u)


class TestSlopes:
    def test_example(self):
        X, Y = [-3, -1, 1], [-1, 0, 1]
        m = find_injective_m_slopes(X, Y)
        assert m == brute_m(X, Y)
        assert len({a - 3 * b for a in X for b in Y}) == 9
        assert m <= comb(81, 2)

    def test_trivial(self):
        assert find_injective_m_slopes([1, 2], [7]) == 0
        assert find_injective_m_slopes([5], [7]) == 0
        # a single X value still needs m != 0 to separate the Y values
        assert find_injective_m_slopes([5], [1, 2, 3]) == 1

    def test_small_grid(self):
        assert find_injective_m_slopes([0, 1], [0, 1]) == 2

    def test_random_minimal(self):
        rng = random.Random(8)
        for _ in range(100):
            X = {F(rng.randint(-12, 12), rng.choice((1, 2, 3))) for _ in range(rng.randint(1, 6))}
            Y = {F(rng.randint(-12, 12), rng.choice((1, 2))) for _ in range(rng.randint(1, 6))}
            m = find_injective_m_slopes(X, Y)
            assert m == brute_m(X, Y)
            assert m <= comb(len(X) * len(Y), 2)


class TestGlue:
    def test_first_step(self, example_basis, p2):
        assert glue(example_basis, p2, [P0, P1]) == P01

    def test_second_step(self, example_basis, p2):
        assert glue(example_basis, p2, [P01, P2]).as_dict() == FULL

    @pytest.mark.parametrize("mode", ["enum", "slope", "auto"])
    def test_modes_agree(self, example_basis, p2, mode):
        assert glue(example_basis, p2, [P0, P1], mode) == P01

    def test_three_way(self, example_basis, p2):
        assert glue(example_basis, p2, [P0, P1, P2]).as_dict() == FULL

    def test_singleton_candidates(self, p2):
        from tropproj.arith import UniPoly
        from tropproj.shapegb import ShapeBasis
        # x^2 - 4 has both roots of valuation 1; x0 = 3x has valuation 1 too
        b = ShapeBasis(UniPoly([-4, 0, 1]), (UniPoly([0, 3]),))
        p0 = Projection.univariate(0, {F(1): 2})
        p1 = Projection.univariate(1, {F(1): 2})
        assert glue(b, p2, [p0, p1]).as_dict() == {(1, 1): 2}
        assert choose_vector([p0, p1], candidate_set([p0, p1]), 0, 2) == SlimVector((-1, 0))

    def test_nothing_to_glue(self, example_basis, p2):
        with pytest.raises(ValueError):
            glue(example_basis, p2, [P01, P0])

    def test_inconsistent_inputs(self, example_basis, p2):
        with pytest.raises(GlueMismatch):
            glue(example_basis, p2, [P01, Projection.from_mapping((1, 2), {(7, 0): 4})])
        with pytest.raises(GlueMismatch):
            glue(example_basis, p2, [P0, Projection.univariate(1, {F(7): 1, F(8): 3})])

    def test_pullback_rejects_collisions(self):
        T = grid((0, 1), (0, 1))
        with pytest.raises(GlueMismatch):
            pullback(T, SlimVector((-1, 1, 0)), {F(0): 4})

    def test_image_is_eliminant_tropicalization(self, example_basis, p2):
        u = SlimVector((-1, 3, 0))
        out = glue(example_basis, p2, [P0, P1])
        image = {u.project(w + (0,)): m for w, m in out.points}
        assert image == trop_univariate(transform_eliminant(example_basis, u), p2)
        assert out.restrict([0]) == P0.as_dict() and out.restrict([1]) == P1.as_dict()
