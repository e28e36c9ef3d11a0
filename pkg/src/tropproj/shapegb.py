"""Lexicographic Groebner bases in shape position and slim transforms.

A basis ``{f_n, x_{n-1} - f_{n-1}, ..., x_1 - f_1}`` is stored by its
univariate data only. Coordinates are indexed from 0, so ``tail[i]`` is the
polynomial giving coordinate ``i`` and coordinate ``n - 1`` is the
variable of the univariate polynomials themselves.
"""

from __future__ import annotations

import threading
from functools import cached_property
from dataclasses import dataclass, field
from typing import Sequence

from .arith import UniPoly, as_poly, poly_gcd
from .quotient import QElt, QuotientCtx, eliminant, q_inverse, q_power, reversal_eliminant


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # "DegreeViolation" | "NotSaturated" | "DegreeTooSmall"
    index: int | None
    message: str

    def __str__(self):
        where = "" if self.index is None else f" [coordinate {self.index}]"
        return f"{self.kind}{where}: {self.message}"


@dataclass(frozen=True)
class SlimVector:
    """Integer vector with exactly one entry -1 (at ``ell``) and the rest >= 0."""

    u: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(c) for c in self.u))
        neg = [i for i, c in enumerate(self.u) if c < 0]
        if len(neg) != 1 or self.u[neg[0]] != -1:
            raise ValueError(f"{self.u} is not slim: need one -1 and non-negative entries")
        if neg[0] == len(self.u) - 1:
            raise ValueError("the -1 entry must not sit on the last coordinate")

    @classmethod
    def unit(cls, n: int, ell: int) -> "SlimVector":
        return cls(tuple(-1 if i == ell else 0 for i in range(n)))

    @property
    def ell(self) -> int:
        return self.u.index(-1)

    @property
    def n(self) -> int:
        return len(self.u)

    def project(self, w: Sequence) -> object:
        """The linear form w -> -sum(u_i w_i)."""
        return -sum(c * x for c, x in zip(self.u, w) if c)

    def __add__(self, other: Sequence[int]) -> "SlimVector":
        return SlimVector(tuple(a + b for a, b in zip(self.u, other)))


@dataclass(frozen=True, eq=False)
class ShapeBasis:
    fn: UniPoly
    tail: tuple[UniPoly, ...] = ()
    _inv_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fn", as_poly(self.fn))
        object.__setattr__(self, "tail", tuple(as_poly(f) for f in self.tail))

    @property
    def n(self) -> int:
        return len(self.tail) + 1

    @property
    def d(self) -> int:
        return self.fn.degree

    def __eq__(self, other):
        if not isinstance(other, ShapeBasis):
            return NotImplemented
        return self.fn == other.fn and self.tail == other.tail

    def __hash__(self):
        return hash((self.fn, self.tail))

    def poly(self, i: int) -> UniPoly:
        """Univariate expression of coordinate i (x itself for the last one)."""
        return self.tail[i] if i < self.n - 1 else UniPoly.x()

    @cached_property
    def ring(self) -> QuotientCtx:
        return QuotientCtx(self.fn)

    def elt(self, i: int) -> QElt:
        return self.ring(self.poly(i))

    def inverse_of(self, i: int) -> QElt:
        """Inverse of coordinate i in the quotient ring, memoised per basis."""
        try:
            return self._inv_cache[i]
        except KeyError:
            pass
        with self._lock:
            if i not in self._inv_cache:
                self._inv_cache[i] = q_inverse(self.elt(i))
            return self._inv_cache[i]

    def replace(self, i: int, f: UniPoly) -> "ShapeBasis":
        tail = list(self.tail)
        tail[i] = f
        return ShapeBasis(self.fn, tuple(tail))


def diagnose(b: ShapeBasis) -> list[Diagnostic]:
    """All violated shape-position conditions, in a fixed order."""
    out = []
    if b.fn.degree < 1:
        return [Diagnostic("DegreeTooSmall", b.n - 1, "f_n must have degree >= 1")]
    if b.fn[0] == 0:
        out.append(Diagnostic("NotSaturated", b.n - 1, "f_n vanishes at 0"))
    for i, f in enumerate(b.tail):
        if f.degree >= b.d:
            out.append(Diagnostic("DegreeViolation", i,
                                  f"degree {f.degree} is not below deg f_n = {b.d}"))
        elif poly_gcd(b.fn, f).degree > 0:
            out.append(Diagnostic("NotSaturated", i, "shares a factor with f_n"))
    return out


def validate(b: ShapeBasis) -> Diagnostic | None:
    """First violated condition, or None when the basis is in shape position."""
    diags = diagnose(b)
    return diags[0] if diags else None


def _multiplier(b: ShapeBasis, u: SlimVector) -> QElt:
    """x^(u_n) * prod f_i^(u_i) over i != ell, reduced mod f_n."""
    ring = b.ring
    h = ring.one()
    for i, e in enumerate(u.u):
        if e > 0:
            h = h * q_power(b.elt(i), e)
    return h


def _check_shape(b: ShapeBasis, u: SlimVector):
    if u.n != b.n:
        raise ValueError(f"slim vector has length {u.n}, basis has {b.n} variables")


def slim_transform(b: ShapeBasis, u: SlimVector) -> ShapeBasis:
    """Basis of the transformed ideal: f_ell replaced by h^-1 * f_ell mod f_n."""
    _check_shape(b, u)
    h = _multiplier(b, u)
    if h.rep == UniPoly.const(1):
        return b
    f_new = (q_inverse(h) * b.elt(u.ell)).rep
    return b.replace(u.ell, f_new)


def transformed_inverse(b: ShapeBasis, u: SlimVector) -> QElt:
    """(f_ell')^-1 = h * f_ell^-1, computed without inverting h."""
    _check_shape(b, u)
    return _multiplier(b, u) * b.inverse_of(u.ell)


def transform_eliminant(b: ShapeBasis, u: SlimVector) -> UniPoly:
    """Monic eliminant of the transformed f_ell, via the reversal trick."""
    _check_shape(b, u)
    if all(e == 0 for i, e in enumerate(u.u) if i != u.ell):
        return eliminant(b.elt(u.ell))
    return reversal_eliminant(transformed_inverse(b, u))
