"""Independent oracles shared by the tests."""

import random
from fractions import Fraction

from tropproj.arith import UniPoly


def det(rows):
    """Determinant by plain Gaussian elimination over Q."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    sign, out = 1, Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return sign * out


def rand_rat(rng: random.Random, size: int = 9) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def rand_poly(rng: random.Random, deg: int, size: int = 9, nonzero_lc: bool = True) -> UniPoly:
    cs = [rand_rat(rng, size) for _ in range(deg + 1)]
    if nonzero_lc and deg >= 0:
        while cs[-1] == 0:
            cs[-1] = rand_rat(rng, size)
    return UniPoly(cs)


def rand_modulus(rng: random.Random, d: int, size: int = 9) -> UniPoly:
    """Random degree-d polynomial with nonzero constant term."""
    while True:
        f = rand_poly(rng, d, size)
        if f[0] != 0:
            return f
