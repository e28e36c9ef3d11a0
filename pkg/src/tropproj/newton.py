"""Newton polygons of univariate polynomials and their tropicalization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import PrimeContext, UniPoly, valuation
from .errors import ZeroConstantTerm, ZeroInput


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of ``(i, v_p(a_i))``; vertices strictly increasing in i."""

    vertices: tuple[tuple[int, Fraction], ...]

    def edges(self):
        """Yield ``(slope, width)`` for each hull edge, left to right."""
        for (i0, h0), (i1, h1) in zip(self.vertices, self.vertices[1:]):
            yield Fraction(h1 - h0, i1 - i0), i1 - i0

    @property
    def slopes(self) -> list[Fraction]:
        return [s for s, _ in self.edges()]


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f: UniPoly, ctx: PrimeContext) -> NewtonPolygon:
    if not f:
        raise ZeroInput("Newton polygon of the zero polynomial")
    hull: list[tuple[int, Fraction]] = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        pt = (i, valuation(c, ctx))
        # monotone chain, lower hull; collinear points are dropped
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonPolygon(tuple(hull))


def trop_univariate(f: UniPoly, ctx: PrimeContext) -> dict[Fraction, int]:
    """Valuations of the roots of f with multiplicities, keyed ascending.

    Each hull edge of slope s and width m contributes the point -s with
    multiplicity m.
    """
    if not f:
        raise ZeroInput("tropicalization of the zero polynomial")
    if f[0] == 0:
        raise ZeroConstantTerm("polynomial vanishes at 0; input is not saturated")
    out: dict[Fraction, int] = {}
    for slope, width in newton_polygon(f, ctx).edges():
        out[-slope] = out.get(-slope, 0) + width
    return dict(sorted(out.items()))
