"""Arithmetic in the quotient ring Q[x]/(f) and eliminants of its elements.

The eliminant of an element ``a`` is the characteristic polynomial of
multiplication by ``a``: its roots are the values of ``a`` at the d roots of
the modulus, counted with multiplicity. The minimal polynomial is also
available; it drops the multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .arith import UniPoly, as_poly, divrem, xgcd
from .errors import NonInvertible, ZeroInput


@dataclass(frozen=True)
class QuotientCtx:
    """The ring Q[x]/(modulus); the modulus need not be monic."""

    modulus: UniPoly

    def __post_init__(self):
        if self.modulus.degree < 1:
            raise ZeroInput("modulus must have degree at least 1")
        if self.modulus[0] == 0:
            raise ZeroInput("modulus must not vanish at 0")

    @property
    def d(self) -> int:
        return self.modulus.degree

    def __call__(self, f) -> "QElt":
        return q_reduce(as_poly(f), self)

    def one(self) -> "QElt":
        return QElt(UniPoly.const(1), self)

    def gen(self) -> "QElt":
        return q_reduce(UniPoly.x(), self)


@dataclass(frozen=True)
class QElt:
    """Canonical remainder modulo the context's modulus."""

    rep: UniPoly
    ctx: QuotientCtx

    def _check(self, other) -> "QElt":
        if isinstance(other, QElt):
            if other.ctx != self.ctx:
                raise ValueError("elements of different quotient rings")
            return other
        return self.ctx(other)

    def __add__(self, other):
        return QElt(self.rep + self._check(other).rep, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        return QElt(self.rep - self._check(other).rep, self.ctx)

    def __neg__(self):
        return QElt(-self.rep, self.ctx)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QElt(self.rep.scale(other), self.ctx)
        return q_reduce(self.rep * self._check(other).rep, self.ctx)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return q_power(self, k)

    def __bool__(self):
        return bool(self.rep)

    def inverse(self) -> "QElt":
        return q_inverse(self)

    def coords(self) -> list[Fraction]:
        """Coordinates in the monomial basis 1, x, ..., x^(d-1)."""
        return [self.rep[i] for i in range(self.ctx.d)]


def q_reduce(f: UniPoly, ctx: QuotientCtx) -> QElt:
    if f.degree < ctx.d:
        return QElt(f, ctx)
    return QElt(divrem(f, ctx.modulus)[1], ctx)


def q_inverse(a: QElt) -> QElt:
    if not a:
        raise NonInvertible("zero is not invertible")
    g, s, _ = xgcd(a.rep, a.ctx.modulus)
    if g.degree > 0:
        raise NonInvertible(f"element shares the factor {g} with the modulus")
    return q_reduce(s, a.ctx)


def q_power(a: QElt, k: int) -> QElt:
    """Square-and-multiply, O(log k) ring multiplications."""
    if k < 0:
        return q_power(q_inverse(a), -k)
    result, base = a.ctx.one(), a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def mult_matrix(a: QElt) -> list[list[Fraction]]:
    """Matrix of multiplication by a; column j holds a * x^j."""
    d = a.ctx.d
    f = a.ctx.modulus
    tail = [c / f.lc for c in f.coeffs[:-1]]
    col = a.coords()
    cols = [col]
    for _ in range(1, d):
        top = col[-1]
        col = [Fraction(0)] + col[:-1]
        if top:
            col = [c - top * t for c, t in zip(col, tail)]
        cols.append(col)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def charpoly_berkowitz(m: list[list[int]]) -> list[int]:
    """Coefficients of det(z*I - m), descending, by Berkowitz's division-free method."""
    n = len(m)
    c = [1]
    for r in range(n):
        row = m[r][:r]
        s = [m[i][r] for i in range(r)]
        t = [1, -m[r][r]]
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, s)))
            s = [sum(m[i][j] * s[j] for j in range(r) if s[j]) for i in range(r)]
        c = [sum(t[i - j] * c[j] for j in range(min(i, r) + 1)) for i in range(r + 2)]
    return c


def charpoly(m: list[list[Fraction]]) -> UniPoly:
    """Characteristic polynomial of a rational matrix, ascending coefficients."""
    n = len(m)
    den = reduce(lambda x, y: x // gcd(x, y) * y,
                 (e.denominator for r in m for e in r), 1)
    mi = [[e.numerator * (den // e.denominator) for e in r] for r in m]
    desc = charpoly_berkowitz(mi)
    # det(zI - m) = den^-n det(den z I - mi)
    return UniPoly([Fraction(desc[n - k], den ** (n - k)) for k in range(n + 1)])


def eliminant(a: QElt) -> UniPoly:
    """Monic degree-d polynomial vanishing at a, with multiplicities."""
    return charpoly(mult_matrix(a))


def minimal_polynomial(a: QElt) -> UniPoly:
    """Lowest-degree monic polynomial mu with mu(a) = 0, by linear dependence of powers."""
    d = a.ctx.d
    basis: list[tuple[int, list[Fraction], list[Fraction]]] = []
    power = a.ctx.one()
    for k in range(d + 1):
        vec = power.coords()
        combo = [Fraction(0)] * k + [Fraction(1)]
        for piv, bvec, bcombo in basis:
            factor = vec[piv]
            if factor:
                factor = factor / bvec[piv]
                vec = [v - factor * b for v, b in zip(vec, bvec)]
                for i, b in enumerate(bcombo):
                    combo[i] -= factor * b
        nz = next((i for i, v in enumerate(vec) if v), None)
        if nz is None:
            return UniPoly(combo)
        basis.append((nz, vec, combo))
        power = power * a
    raise AssertionError("powers of a must become dependent within d + 1 steps")


def reversal_eliminant(a: QElt) -> UniPoly:
    """Eliminant of a^-1, read off from eliminant(a) by reversing coefficients."""
    chi = eliminant(a)
    if chi[0] == 0:
        raise NonInvertible("element is a zero divisor")
    return chi.reversed().monic()
