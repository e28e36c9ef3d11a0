import random
from fractions import Fraction as F

import pytest

from tropproj.arith import UniPoly
from tropproj.errors import NonInvertible
from tropproj.quotient import eliminant, q_power
from tropproj.shapegb import (
    ShapeBasis,
    SlimVector,
    diagnose,
    slim_transform,
    transform_eliminant,
    transformed_inverse,
    validate,
)

from conftest import F1P, F1PP, F3, RES1, RES2
from helpers import rand_modulus, rand_poly

X = UniPoly.x()


def rand_basis(rng, d, n):
    while True:
        b = ShapeBasis(rand_modulus(rng, d), tuple(rand_poly(rng, rng.randint(0, d - 1))
                                                  for _ in range(n - 1)))
        if validate(b) is None:
            return b


def rand_slim(rng, n, top=3):
    ell = rng.randrange(n - 1)
    return SlimVector(tuple(-1 if i == ell else rng.randint(0, top) for i in range(n)))


def multiplier(b, u):
    h = b.ring.one()
    for i, e in enumerate(u.u):
        if i != u.ell:
            h = h * q_power(b.elt(i), e)
    return h


class TestSlimVector:
    def test_valid(self):
        u = SlimVector((-1, 3, 0))
        assert u.ell == 0 and u.n == 3
        assert u.project((F(1), F(2), F(5))) == 1 - 6
        assert SlimVector.unit(3, 1).u == (0, -1, 0)
        assert (u + (0, 0, 2)).u == (-1, 3, 2)

    @pytest.mark.parametrize("bad", [(0, 0, 0), (-1, -1, 0), (-2, 1, 0), (1, 2, -1)])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            SlimVector(bad)


class TestValidate:
    def test_example_ok(self, example_basis):
        assert validate(example_basis) is None
        assert diagnose(example_basis) == []

    def test_degree_violation(self):
        d = validate(ShapeBasis(F3, (X ** 4, X)))
        assert d.kind == "DegreeViolation" and d.index == 0

    def test_zero_constant_term(self):
        assert validate(ShapeBasis(X * X - X, (X + 3,))).kind == "NotSaturated"

    def test_common_factor(self):
        fn = (X - 1) * (X + 2)
        assert validate(ShapeBasis(fn, (X - 1,))).kind == "NotSaturated"

    def test_zero_tail_entry_rejected(self):
        assert validate(ShapeBasis(F3, (UniPoly(), X))).kind == "NotSaturated"

    def test_constant_modulus(self):
        assert validate(ShapeBasis(UniPoly([3]), ())).kind == "DegreeTooSmall"

    def test_reports_every_violation(self):
        kinds = [d.kind for d in diagnose(ShapeBasis(X * X - X, (X ** 3, X - 1)))]
        assert kinds == ["NotSaturated", "DegreeViolation", "NotSaturated"]


class TestTransform:
    def test_first_example(self, example_basis):
        out = slim_transform(example_basis, SlimVector((-1, 3, 0)))
        assert out.tail[0] == F1P
        assert out.tail[1] == example_basis.tail[1] and out.fn == F3

    def test_second_example(self, example_basis):
        assert slim_transform(example_basis, SlimVector((-1, 0, 3))).tail[0] == F1PP

    def test_identity_vector(self, example_basis):
        assert slim_transform(example_basis, SlimVector.unit(3, 0)) == example_basis
        assert slim_transform(example_basis, SlimVector.unit(3, 1)) == example_basis

    def test_eliminants(self, example_basis):
        assert transform_eliminant(example_basis, SlimVector((-1, 3, 0))) == RES1.monic()
        assert transform_eliminant(example_basis, SlimVector((-1, 0, 3))) == RES2.monic()
        assert transform_eliminant(example_basis, SlimVector.unit(3, 0)) \
            == eliminant(example_basis.elt(0))

    def test_length_mismatch(self, example_basis):
        with pytest.raises(ValueError):
            slim_transform(example_basis, SlimVector((-1, 0)))

    def test_non_invertible(self):
        # skips validation on purpose: f_0 shares the factor x - 1 with f_n
        b = ShapeBasis((X - 1) * (X + 2), (X - 1, X + 5))
        with pytest.raises(NonInvertible):
            transform_eliminant(b, SlimVector((-1, 1, 0)))

    def test_inverse_is_cached(self, example_basis):
        first = example_basis.inverse_of(0)
        assert example_basis.inverse_of(0) is first
        assert first * example_basis.elt(0) == example_basis.ring.one()


def test_random_transform_properties():
    rng = random.Random(23)
    for _ in range(60):
        d, n = rng.randint(1, 5), rng.randint(2, 4)
        b = rand_basis(rng, d, n)
        u = rand_slim(rng, n)
        out = slim_transform(b, u)
        ell = u.ell
        # h * f_ell' = f_ell mod f_n
        assert multiplier(b, u) * out.elt(ell) == b.elt(ell)
        assert validate(out) is None
        assert all(out.tail[i] == b.tail[i] for i in range(n - 1) if i != ell)
        assert transform_eliminant(b, u) == eliminant(out.elt(ell))
        assert transformed_inverse(b, u) * out.elt(ell) == b.ring.one()


def test_composition():
    rng = random.Random(29)
    for _ in range(40):
        d, n = rng.randint(1, 5), rng.randint(2, 4)
        b = rand_basis(rng, d, n)
        v = rand_slim(rng, n)
        k = rng.choice([i for i in range(n) if i != v.ell])
        m = rng.randint(0, 3)
        step = SlimVector.unit(n, v.ell) + [m if i == k else 0 for i in range(n)]
        both = slim_transform(slim_transform(b, v), step)
        assert both == slim_transform(b, v + [m if i == k else 0 for i in range(n)])
