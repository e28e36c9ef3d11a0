"""Exact rationals, p-adic valuations and dense univariate polynomials over Q.

Rationals are :class:`fractions.Fraction` throughout; the class already keeps
numerator and denominator coprime with a positive denominator, which is the
canonical form everything downstream relies on for hashing and equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Callable, Iterable, Sequence

from sympy import factorint

from .errors import BothZero, DivisionByZeroPoly, ZeroHasNoValuation, ZeroInput

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rat(text: str | int | Fraction) -> Fraction:
    """Parse ``"a"`` or ``"a/b"``; floats and decimal notation are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot parse {text!r} as a rational")
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def rat_to_str(c: Fraction) -> str:
    return str(Fraction(c))


# -- primes and valuations ---------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= 3_317_044_064_679_887_385_961_981:
        raise ValueError("primality check is only deterministic below 3.3e24")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeContext:
    """The prime p defining the p-adic valuation."""

    p: int = 2

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")

    def valuation(self, c) -> Fraction:
        return valuation(c, self)


def int_valuation(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise ZeroHasNoValuation("0 has no valuation")
    n = abs(n)
    if p == 2:
        return (n & -n).bit_length() - 1
    v = 0
    # strip p^(2^k) blocks first so huge exponents cost O(log v) divisions
    powers = [p]
    while True:
        q, r = divmod(n, powers[-1])
        if r:
            break
        n = q
        v += 1 << (len(powers) - 1)
        powers.append(powers[-1] * powers[-1])
    for k in range(len(powers) - 2, -1, -1):
        q, r = divmod(n, powers[k])
        if r == 0:
            n = q
            v += 1 << k
    return v


def valuation(c, ctx: PrimeContext) -> Fraction:
    """p-adic valuation of a nonzero rational, returned as an integral Fraction."""
    c = Fraction(c)
    if c == 0:
        raise ZeroHasNoValuation("0 has no valuation")
    return Fraction(int_valuation(c.numerator, ctx.p) - int_valuation(c.denominator, ctx.p))


# -- dense univariate polynomials -------------------------------------------

def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


class UniPoly:
    """Dense univariate polynomial over Q with ascending coefficients.

    Instances are immutable and hashable. The zero polynomial has no
    coefficients and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "UniPoly":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable, lc=1) -> "UniPoly":
        f = cls.const(lc)
        for r in roots:
            f = f * cls((-Fraction(r), 1))
        return f

    # basic accessors
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"({c})" if (c.denominator != 1 and mono) else str(c)
                s = s + ("*" + mono if mono else "")
            terms.append(s)
        out = " + ".join(terms)
        return out.replace("+ -", "- ")

    # ring operations
    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly._raw(())
        an, ad = self.to_int()
        bn, bd = other.to_int()
        prod = _int_convolve(an, bn)
        den = ad * bd
        return UniPoly._raw(tuple(Fraction(c, den) for c in prod))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "UniPoly":
        c = Fraction(c)
        if c == 0:
            return UniPoly._raw(())
        return UniPoly._raw(tuple(x * c for x in self.coeffs))

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        return divrem(self, self._coerce(other))

    def __floordiv__(self, other) -> "UniPoly":
        return divrem(self, self._coerce(other))[0]

    def __mod__(self, other) -> "UniPoly":
        return divrem(self, self._coerce(other))[1]

    def __call__(self, x):
        """Horner evaluation; works for any ring element x."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_int(self) -> tuple[list[int], int]:
        """Return (numerators, D) with self = (sum numerators[i] x^i) / D, D > 0 minimal."""
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        return [c.numerator * (den // c.denominator) for c in self.coeffs], den

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ZeroInput("cannot normalise the zero polynomial")
        return self.scale(1 / self.lc)

    def reversed(self) -> "UniPoly":
        """x^deg * f(1/x)."""
        return UniPoly(reversed(self.coeffs))


def _int_convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def as_poly(f) -> UniPoly:
    if isinstance(f, UniPoly):
        return f
    if isinstance(f, (int, Fraction)):
        return UniPoly.const(f)
    return UniPoly(f)


# -- division, gcd ----------------------------------------------------------

def divrem(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Quotient and remainder with f = q*g + r, deg r < deg g."""
    if not g:
        raise DivisionByZeroPoly("polynomial division by zero")
    dg = g.degree
    if f.degree < dg:
        return UniPoly._raw(()), f
    r = list(f.coeffs)
    inv_lc = 1 / g.lc
    gc = g.coeffs
    q = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = c * inv_lc
        q[k - dg] = c
        base = k - dg
        for j in range(dg):
            if gc[j]:
                r[base + j] -= c * gc[j]
        r[k] = Fraction(0)
    return UniPoly(q), UniPoly(r[:dg])


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd of f and g."""
    return xgcd(f, g)[0]


def xgcd(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (h, s, t) with h = s*f + t*g = gcd(f, g) and h monic."""
    if not f and not g:
        raise BothZero("gcd of two zero polynomials is undefined")
    r0, r1 = f, g
    s0, s1 = UniPoly.const(1), UniPoly()
    t0, t1 = UniPoly(), UniPoly.const(1)
    while r1:
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_part(f: UniPoly) -> UniPoly:
    """f / gcd(f, f'), made monic."""
    if not f:
        raise ZeroInput("squarefree part of zero")
    if f.degree == 0:
        return UniPoly.const(1)
    q, r = divrem(f, poly_gcd(f, f.derivative()))
    assert not r
    return q.monic()


# -- resultants -------------------------------------------------------------

def _deg(cs: list) -> int:
    return len(cs) - 1


def _strip(cs: list, is_zero) -> list:
    while cs and is_zero(cs[-1]):
        cs.pop()
    return cs


def _prem(a: list, b: list, is_zero) -> list:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, division free."""
    r = list(a)
    db = _deg(b)
    lb = b[-1]
    e = _deg(a) - db + 1
    while r and _deg(r) >= db:
        c = r[-1]
        shift = _deg(r) - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - c * b[j]
        r.pop()
        _strip(r, is_zero)
        e -= 1
    if e > 0:
        r = [x * (lb ** e) for x in r]
    return r


def _subresultant(a: list, b: list, one, is_zero, exact_div: Callable):
    """Resultant of two nonzero coefficient lists over an integral domain.

    Collins-Brown subresultant PRS; all divisions are exact in the domain.
    """
    if _deg(a) < _deg(b):
        a, b = b, a
        s = -1 if (_deg(a) % 2 and _deg(b) % 2) else 1
    else:
        s = 1
    if _deg(b) == 0:
        return b[0] ** _deg(a) * s
    g = h = one
    while True:
        delta = _deg(a) - _deg(b)
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
        r = _prem(a, b, is_zero)
        a = b
        if not r:
            return a[0] * 0
        b = [exact_div(x, g * h ** delta) for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exact_div(g ** delta, h ** (delta - 1))
        if _deg(b) == 0:
            da = _deg(a)
            if da == 1:
                res = b[0]
            else:
                res = exact_div(b[0] ** da, h ** (da - 1))
            return res * s


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Res_x(f, g) for f, g with rational coefficients."""
    if not f or not g:
        raise ZeroInput("resultant with a zero polynomial")
    return Fraction(_subresultant(list(f.coeffs), list(g.coeffs), Fraction(1),
                                  lambda c: c == 0, lambda x, y: x / y))


def _exact_poly_div(x: UniPoly, y: UniPoly) -> UniPoly:
    q, r = divrem(x, y)
    if r:
        raise ArithmeticError("inexact division in subresultant chain")
    return q


def resultant_bivariate(f: Sequence[UniPoly], g: Sequence[UniPoly]) -> UniPoly:
    """Resultant in x of two polynomials whose x-coefficients lie in Q[z].

    ``f[i]`` is the coefficient (a polynomial in z) of x^i. Returns a
    polynomial in z.
    """
    a = _strip([as_poly(c) for c in f], lambda c: not c)
    b = _strip([as_poly(c) for c in g], lambda c: not c)
    if not a or not b:
        raise ZeroInput("resultant with a zero polynomial")
    return _subresultant(a, b, UniPoly.const(1), lambda c: not c, _exact_poly_div)


def eliminant_by_resultant(modulus: UniPoly, g: UniPoly) -> UniPoly:
    """Res_x(modulus(x), z - g(x)) as a polynomial in z."""
    other = [UniPoly.const(-c) for c in g.coeffs] or [UniPoly()]
    other[0] = other[0] + UniPoly.x()
    return resultant_bivariate([UniPoly.const(c) for c in modulus.coeffs], other)


# -- rational roots ---------------------------------------------------------

def _divisors(n: int) -> list[int]:
    n = abs(n)
    fac = factorint(n)
    divs = [1]
    for q, e in fac.items():
        divs = [d * q ** k for d in divs for k in range(e + 1)]
    return divs


def rational_roots(f: UniPoly) -> dict[Fraction, int]:
    """All rational roots of f with multiplicities, ordered ascending."""
    if not f:
        raise ZeroInput("roots of the zero polynomial")
    roots: dict[Fraction, int] = {}
    lo = 0
    while f[lo] == 0:
        lo += 1
    if lo:
        roots[Fraction(0)] = lo
        f = UniPoly(f.coeffs[lo:])
    if f.degree == 0:
        return dict(sorted(roots.items()))
    nums, _ = f.to_int()
    content = reduce(math.gcd, nums)
    nums = [c // content for c in nums]
    f1, fm1 = sum(nums), sum(c * (-1) ** i for i, c in enumerate(nums))
    cands = set()
    for s, t in product(_divisors(nums[0]), _divisors(nums[-1])):
        if math.gcd(s, t) != 1:
            continue
        for sign in (1, -1):
            ss = sign * s
            # F(1) and F(-1) must be divisible by (t - s) and (t + s)
            if (t - ss) and f1 % (t - ss):
                continue
            if (t + ss) and fm1 % (t + ss):
                continue
            cands.add(Fraction(ss, t))
    for r in sorted(cands):
        lin = UniPoly((-r, 1))
        m = 0
        while f.degree >= 1:
            q, rem = divrem(f, lin)
            if rem:
                break
            f, m = q, m + 1
        if m:
            roots[r] = m
    return dict(sorted(roots.items()))


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[Fraction]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return rows
