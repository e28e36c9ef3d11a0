"""Full tropical variety from a shape basis: coordinate projections, then gluing.

The gluing order is a list of batches of :class:`GlueTask`; tasks inside a
batch only read projections computed by earlier batches, so they may run
concurrently. :func:`run_schedule` accepts any such schedule, which is how
custom gluing graphs are plugged in.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .arith import PrimeContext, rational_roots, valuation
from .errors import GlueMismatch, InvalidArity, InvalidBasis, ZeroCoordinate
from .glue import Projection, candidate_set, find_injective_m_slopes, glue, pullback
from .newton import trop_univariate
from .quotient import eliminant, q_power, reversal_eliminant
from .shapegb import ShapeBasis, SlimVector, diagnose


@dataclass(frozen=True)
class Strategy:
    """Gluing strategy: ``one-projection``, ``sequential``, ``regular-tree`` (arity k) or ``overlap``."""

    name: str
    k: int | None = None

    NAMES = ("one-projection", "sequential", "regular-tree", "overlap")

    def __post_init__(self):
        if self.name not in self.NAMES:
            raise ValueError(f"unknown strategy {self.name!r}")
        if self.name == "regular-tree":
            if self.k is None or self.k < 2:
                raise InvalidArity(f"regular-tree needs arity >= 2, got {self.k}")
        elif self.k is not None:
            raise ValueError(f"{self.name} takes no arity")

    @classmethod
    def parse(cls, text: str) -> "Strategy":
        name, _, arg = text.partition("=")
        return cls(name, int(arg) if arg else (2 if name == "regular-tree" else None))

    def __str__(self):
        return f"{self.name}={self.k}" if self.k is not None else self.name


ONE_PROJECTION = Strategy("one-projection")
SEQUENTIAL = Strategy("sequential")
OVERLAP = Strategy("overlap")


def regular_tree(k: int) -> Strategy:
    return Strategy("regular-tree", k)


ALL_STRATEGIES = (ONE_PROJECTION, SEQUENTIAL, regular_tree(2), OVERLAP)


@dataclass(frozen=True)
class Instance:
    basis: ShapeBasis
    ctx: PrimeContext = PrimeContext(2)

    def __post_init__(self):
        diags = diagnose(self.basis)
        if diags:
            raise InvalidBasis(diags)

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def d(self) -> int:
        return self.basis.d


@dataclass(frozen=True)
class GlueTask:
    inputs: tuple[tuple[int, ...], ...]

    @property
    def output(self) -> tuple[int, ...]:
        return tuple(sorted(set().union(*self.inputs)))


def initial_projections(inst: Instance) -> list[Projection]:
    """Projection onto each single coordinate, with multiplicities."""
    b, ctx = inst.basis, inst.ctx
    out = [Projection.univariate(i, trop_univariate(eliminant(b.elt(i)), ctx))
           for i in range(b.n - 1)]
    out.append(Projection.univariate(b.n - 1, trop_univariate(b.fn, ctx)))
    return out


def strategy_schedule(n: int, strat: Strategy) -> list[list[GlueTask]]:
    """Batches of glue tasks realising the strategy on n coordinates."""
    if n < 2:
        raise ValueError("gluing needs at least two coordinates")
    singles = [(i,) for i in range(n)]
    if strat.name == "one-projection":
        return [[GlueTask(tuple(singles))]]
    if strat.name == "sequential":
        return [[GlueTask((tuple(range(k)), (k,)))] for k in range(1, n)]
    if strat.name == "regular-tree":
        batches, level = [], singles
        while len(level) > 1:
            chunks = [level[i:i + strat.k] for i in range(0, len(level), strat.k)]
            batches.append([GlueTask(tuple(c)) for c in chunks if len(c) > 1])
            level = [GlueTask(tuple(c)).output if len(c) > 1 else c[0] for c in chunks]
        return batches
    # overlap: batch i glues {0..i-1} with {0..i-2, j} for every j >= i
    batches = []
    for i in range(1, n):
        left = tuple(range(i))
        batches.append([GlueTask((left, tuple(range(i - 1)) + (j,))) for j in range(i, n)])
    return batches


def run_schedule(inst: Instance, schedule: Sequence[Sequence[GlueTask]],
                 threads: int = 1, initial: Sequence[Projection] | None = None,
                 mode: str = "auto") -> Projection:
    """Execute batches in order; results are keyed by coordinate set, so completion order is irrelevant."""
    known = {p.A: p for p in (initial or initial_projections(inst))}
    for batch in schedule:
        def work(task: GlueTask) -> Projection:
            return glue(inst.basis, inst.ctx, [known[a] for a in task.inputs], mode)
        if threads > 1 and len(batch) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(work, batch))
        else:
            results = [work(t) for t in batch]
        for task, res in zip(batch, results):
            known[task.output] = res
    return known[tuple(range(inst.n))]


def _run_sequential(inst: Instance, initial: Sequence[Projection]) -> Projection:
    """Sequential gluing that carries the transform from one step to the next.

    The inverse of the transformed first coordinate is kept; attaching
    coordinate k with slope m only multiplies it by f_k^m, so no further
    inversions happen after the first one.
    """
    b, ctx, n = inst.basis, inst.ctx, inst.n
    v = SlimVector.unit(n, 0)
    inv = b.inverse_of(0)
    cur = initial[0]
    for k in range(1, n):
        X = [v.project(_embed(cur.A, w, n)) for w, _ in cur.points]
        Y = [w[0] for w, _ in initial[k].points]
        m = find_injective_m_slopes(X, Y)
        if m:
            inv = inv * q_power(b.elt(k), m)
            v = v + [m if i == k else 0 for i in range(n)]
        T = candidate_set([cur, initial[k]])
        cur = pullback(T, v, trop_univariate(reversal_eliminant(inv), ctx))
        if cur.degree != inst.d:
            raise GlueMismatch(f"multiplicities sum to {cur.degree}, expected {inst.d}")
    return cur


def _embed(A, w, n):
    full = [0] * n
    for i, c in zip(A, w):
        full[i] = c
    return full


def run(inst: Instance, strat: Strategy = OVERLAP, threads: int = 1) -> Projection:
    """Tropical variety of the instance on all n coordinates."""
    initial = initial_projections(inst)
    if inst.n == 1:
        return initial[0]
    if strat.name == "sequential":
        return _run_sequential(inst, initial)
    return run_schedule(inst, strategy_schedule(inst.n, strat), threads, initial)


def split_oracle(inst: Instance) -> Projection | None:
    """Tropical variety read off from the rational roots of f_n, or None if f_n does not split."""
    b, ctx = inst.basis, inst.ctx
    roots = rational_roots(b.fn)
    if sum(roots.values()) != b.d:
        return None
    points: dict[tuple, int] = {}
    for r, mult in roots.items():
        vals = []
        for i in range(b.n):
            c = b.poly(i)(r)
            if c == 0:
                raise ZeroCoordinate(f"coordinate {i} vanishes at the root {r}")
            vals.append(valuation(c, ctx))
        key = tuple(vals)
        points[key] = points.get(key, 0) + mult
    return Projection.from_mapping(range(b.n), points)
