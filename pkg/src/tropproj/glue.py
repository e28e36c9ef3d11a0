"""Gluing coordinate projections of a tropical variety.

Given projections of the same finite tropical variety onto coordinate
subsets A_1, ..., A_k, the projection onto their union is recovered by:

1. forming the candidate set T (fiber product of the inputs),
2. choosing a slim vector u whose linear form is injective on T,
3. tropicalizing the eliminant of the transformed coordinate, and
4. keeping the candidates whose image is a tropical root, each inheriting
   that root's multiplicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import count, islice
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .arith import PrimeContext
from .errors import GlueMismatch
from .newton import trop_univariate
from .shapegb import ShapeBasis, SlimVector, transform_eliminant

Point = tuple[Fraction, ...]

_CHUNK = 2048


@dataclass(frozen=True)
class Projection:
    """Multiset of tropical points on the coordinates ``A`` (sorted indices)."""

    A: tuple[int, ...]
    points: tuple[tuple[Point, int], ...]

    def __post_init__(self):
        A = tuple(self.A)
        if list(A) != sorted(set(A)):
            raise ValueError(f"coordinate indices must be sorted and distinct: {A}")
        pts = {}
        for coords, mult in self.points:
            coords = tuple(Fraction(c) for c in coords)
            if len(coords) != len(A):
                raise ValueError(f"point {coords} does not match coordinates {A}")
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            if coords in pts:
                raise ValueError(f"duplicate point {coords}")
            pts[coords] = int(mult)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "points", tuple(sorted(pts.items())))

    @classmethod
    def from_mapping(cls, A: Iterable[int], mapping: Mapping) -> "Projection":
        return cls(tuple(A), tuple(mapping.items()))

    @classmethod
    def univariate(cls, i: int, trop: Mapping[Fraction, int]) -> "Projection":
        return cls((i,), tuple(((w,), m) for w, m in trop.items()))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.points)

    def as_dict(self) -> dict[Point, int]:
        return dict(self.points)

    def point_set(self) -> set[Point]:
        return {c for c, _ in self.points}

    def restrict(self, B: Iterable[int]) -> dict[Point, int]:
        """Push the multiset forward to the coordinates B, a subset of A."""
        idx = [self.A.index(i) for i in sorted(B)]
        out: dict[Point, int] = {}
        for coords, m in self.points:
            key = tuple(coords[j] for j in idx)
            out[key] = out.get(key, 0) + m
        return dict(sorted(out.items()))

    def __str__(self):
        body = ", ".join(f"({', '.join(map(str, c))}): {m}" for c, m in self.points)
        return f"{{{body}}}"

    def distinct(self) -> "Projection":
        """Same points, every multiplicity set to one."""
        return Projection(self.A, tuple((c, 1) for c, _ in self.points))


@dataclass(frozen=True)
class CandidateSet:
    A: tuple[int, ...]
    elems: tuple[Point, ...]

    def __len__(self):
        return len(self.elems)


def candidate_set(ps: Sequence[Projection]) -> CandidateSet:
    """Fiber product of the inputs over their shared coordinates."""
    if not ps:
        raise ValueError("need at least one projection")
    order = sorted(ps, key=lambda p: len(p.A))
    cur_A = order[0].A
    cur = [c for c, _ in order[0].points]
    for p in order[1:]:
        shared = [i for i in p.A if i in cur_A]
        new_A = tuple(sorted(set(cur_A) | set(p.A)))
        cur_pos = {i: k for k, i in enumerate(cur_A)}
        p_pos = {i: k for k, i in enumerate(p.A)}
        index: dict[Point, list[Point]] = {}
        for coords, _ in p.points:
            index.setdefault(tuple(coords[p_pos[i]] for i in shared), []).append(coords)
        joined = set()
        for w in cur:
            for q in index.get(tuple(w[cur_pos[i]] for i in shared), ()):
                joined.add(tuple(w[cur_pos[i]] if i in cur_pos else q[p_pos[i]]
                                 for i in new_A))
        cur_A, cur = new_A, sorted(joined)
    return CandidateSet(cur_A, tuple(sorted(set(cur))))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-negative compositions of total, lexicographically ascending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _integral_rows(elems: Sequence[Point]) -> list[tuple[int, ...]]:
    """Scale all coordinates by a common denominator; injectivity is unaffected."""
    den = reduce(lambda a, b: a // math.gcd(a, b) * b,
                 (c.denominator for w in elems for c in w), 1)
    return [tuple(c.numerator * (den // c.denominator) for c in w) for w in elems]


def _injective(rows: Sequence[tuple[int, ...]], weights: Sequence[int]) -> bool:
    seen = set()
    for w in rows:
        v = sum(a * b for a, b in zip(weights, w) if a)
        if v in seen:
            return False
        seen.add(v)
    return True


def is_injective(T: CandidateSet, u: SlimVector) -> bool:
    weights = [u.u[i] for i in T.A]
    return _injective(_integral_rows(T.elems), weights)


def _first_injective_numpy(rows: np.ndarray, weights: np.ndarray) -> int | None:
    """Index of the first weight row injective on rows, or None."""
    vals = rows @ weights.T
    vals.sort(axis=0)
    ok = np.all(np.diff(vals, axis=0) != 0, axis=0)
    hits = np.flatnonzero(ok)
    return int(hits[0]) if hits.size else None


def find_injective_u_enum(T: CandidateSet, ell: int, n: int) -> SlimVector:
    """Smallest-l1 slim vector supported on T.A, concentrated at ell, injective on T.

    Ties within an l1 shell are broken lexicographically on the entries
    indexed by T.A.
    """
    if ell not in T.A or ell == n - 1:
        raise ValueError(f"concentration index {ell} must lie in {T.A} and not be {n - 1}")
    if not T.elems:
        raise ValueError("empty candidate set")
    rows = _integral_rows(T.elems)
    pos = T.A.index(ell)
    # a coordinate that is constant on T only shifts the image, so the
    # minimal u is zero there and it can be left out of the search
    free = [j for j in range(len(T.A))
            if j != pos and len({w[j] for w in rows}) > 1]
    bound = max((abs(c) for w in rows for c in w), default=0) * len(T.A)
    arr = np.array(rows, dtype=np.int64) if bound < 2**40 else None

    def expand(comp):
        weights = [0] * len(T.A)
        weights[pos] = -1
        for j, c in zip(free, comp):
            weights[j] = c
        return weights

    def to_slim(weights):
        u = [0] * n
        for i, c in zip(T.A, weights):
            u[i] = int(c)
        return SlimVector(tuple(u))

    for shell in count():
        comps = _compositions(shell, len(free))
        # shells are checked in chunks so memory stays bounded; within a
        # shell the first hit in lexicographic order wins
        while True:
            chunk = [expand(c) for c in islice(comps, _CHUNK)]
            if not chunk:
                break
            if arr is not None and shell * bound < 2**62:
                hit = _first_injective_numpy(arr, np.array(chunk, dtype=np.int64))
                if hit is not None:
                    return to_slim(chunk[hit])
            else:
                for weights in chunk:
                    if _injective(rows, weights):
                        return to_slim(weights)
    raise AssertionError("unreachable")


def find_injective_m_slopes(X: Iterable, Y: Iterable) -> int:
    """Least m >= 0 making (a, b) -> a - m*b injective on X x Y.

    A pair of points collides exactly when the line through them has slope
    m, so m is the least non-negative integer that is not such a slope.
    """
    X = sorted(set(Fraction(a) for a in X))
    Y = sorted(set(Fraction(b) for b in Y))
    if not X or not Y:
        raise ValueError("need non-empty X and Y")
    pts = [(a, b) for a in X for b in Y]
    slopes = set()
    for i, (a, b) in enumerate(pts):
        for a2, b2 in pts[i + 1:]:
            if b != b2:
                s = (a - a2) / (b - b2)
                if s.denominator == 1 and s >= 0:
                    slopes.add(int(s))
    m = 0
    while m in slopes:
        m += 1
    return m


def pullback(T: CandidateSet, u: SlimVector, trop: Mapping[Fraction, int]) -> Projection:
    """Candidates whose image under u is a tropical root, with that root's multiplicity."""
    by_value: dict[Fraction, Point] = {}
    for w in T.elems:
        v = -sum(u.u[i] * c for i, c in zip(T.A, w) if u.u[i])
        if v in by_value:
            raise GlueMismatch(f"slim vector {u.u} is not injective on the candidate set")
        by_value[Fraction(v)] = w
    points = []
    for t, m in trop.items():
        w = by_value.get(t)
        if w is None:
            raise GlueMismatch(f"tropical root {t} has no preimage among the candidates")
        points.append((w, m))
    return Projection(T.A, tuple(points))


def _slope_split(ps: Sequence[Projection], ell: int):
    """(X side, k) when one input is a singleton {k} and the other contains ell."""
    if len(ps) != 2:
        return None
    for side, other in ((ps[0], ps[1]), (ps[1], ps[0])):
        if len(other.A) == 1 and other.A[0] != ell and ell in side.A \
                and other.A[0] not in side.A:
            return side, other.A[0]
    return None


def choose_vector(ps: Sequence[Projection], T: CandidateSet, ell: int, n: int,
                  mode: str = "auto") -> SlimVector:
    split = _slope_split(ps, ell) if mode in ("auto", "slope") else None
    if split is None:
        if mode == "slope":
            raise ValueError("slope mode needs a singleton input and a side containing ell")
        return find_injective_u_enum(T, ell, n)
    side, k = split
    single = ps[1] if side is ps[0] else ps[0]
    v = find_injective_u_enum(CandidateSet(side.A, tuple(c for c, _ in side.points)), ell, n)
    X = [-sum(v.u[i] * c for i, c in zip(side.A, w)) for w, _ in side.points]
    Y = [w[0] for w, _ in single.points]
    m = find_injective_m_slopes(X, Y)
    return v + [m if i == k else 0 for i in range(n)]


def glue(b: ShapeBasis, ctx: PrimeContext, ps: Sequence[Projection],
         mode: str = "auto") -> Projection:
    """Projection onto the union of the inputs' coordinates.

    ``mode`` is ``"enum"`` (shell enumeration), ``"slope"`` (a singleton
    input is attached through the least admissible slope) or ``"auto"``,
    which picks slope mode whenever it applies.
    """
    n = b.n
    A = tuple(sorted(set().union(*(p.A for p in ps))))
    if any(set(p.A) == set(A) for p in ps):
        raise ValueError(f"nothing to glue: {A} is already one of the inputs")
    ell = min(i for i in A if i != n - 1)
    T = candidate_set(ps)
    if not T.elems:
        raise GlueMismatch("inputs are inconsistent: empty candidate set")
    u = choose_vector(ps, T, ell, n, mode)
    trop = trop_univariate(transform_eliminant(b, u), ctx)
    out = pullback(T, u, trop)
    if out.degree != b.d:
        raise GlueMismatch(f"multiplicities sum to {out.degree}, expected {b.d}")
    return out
