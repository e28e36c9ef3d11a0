import random
from collections import Counter
from fractions import Fraction as F

import pytest

from tropproj.arith import PrimeContext, UniPoly, valuation
from tropproj.errors import ZeroConstantTerm, ZeroInput
from tropproj.newton import newton_polygon, trop_univariate

from conftest import F3, RES1, RES2
from helpers import rand_modulus


def test_polygon_of_f3(p2):
    assert newton_polygon(F3, p2).vertices == ((0, 1), (1, 0), (3, 0), (4, 1))
    assert newton_polygon(F3, p2).slopes == [-1, 0, 1]


def test_polygon_of_second_resultant(p2):
    # heights 11, 7, 5, 3, 3; (2, 5) sits on the edge from (1, 7) to (3, 3)
    poly = newton_polygon(RES2, p2)
    assert poly.vertices == ((0, 11), (1, 7), (3, 3), (4, 3))
    assert poly.slopes == [-4, -2, 0]


def test_polygon_linear(p2):
    assert newton_polygon(UniPoly([2, 1]), p2).vertices == ((0, 1), (1, 0))


@pytest.mark.parametrize("f,expected", [
    (F3, {-1: 1, 0: 2, 1: 1}),
    (RES1, {-3: 1, -1: 2, 1: 1}),
    (RES2, {0: 1, 2: 2, 4: 1}),
    (UniPoly([2, 0, 1]), {F(1, 2): 2}),
])
def test_trop_univariate(p2, f, expected):
    assert trop_univariate(f, p2) == expected


def test_errors(p2):
    with pytest.raises(ZeroInput):
        newton_polygon(UniPoly(), p2)
    with pytest.raises(ZeroConstantTerm):
        trop_univariate(UniPoly([0, 1, 1]), p2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_matches_root_valuations(p):
    ctx = PrimeContext(p)
    rng = random.Random(p)
    for _ in range(100):
        roots = [F(rng.choice([1, -1]) * rng.randint(1, 40), rng.randint(1, 40))
                 * F(p) ** rng.randint(-6, 6) for _ in range(rng.randint(1, 7))]
        f = UniPoly.from_roots(roots, lc=F(rng.randint(1, 50), rng.randint(1, 50)))
        expect = Counter(valuation(r, ctx) for r in roots)
        assert trop_univariate(f, ctx) == dict(sorted(expect.items()))


def test_invariants_random(p2):
    rng = random.Random(7)
    for _ in range(100):
        f = rand_modulus(rng, rng.randint(1, 7), size=40)
        g = rand_modulus(rng, rng.randint(1, 4), size=40)
        tf = trop_univariate(f, p2)
        # scalar invariance
        assert trop_univariate(f.scale(F(rng.randint(1, 99), 8)), p2) == tf
        # multiplicity conservation
        assert sum(tf.values()) == f.degree
        # sum of root valuations = v(a_0) - v(a_d)
        assert sum(w * m for w, m in tf.items()) == valuation(f[0], p2) - valuation(f.lc, p2)
        # product rule
        tg = trop_univariate(g, p2)
        union = Counter(tf) + Counter(tg)
        assert trop_univariate(f * g, p2) == dict(sorted(union.items()))
