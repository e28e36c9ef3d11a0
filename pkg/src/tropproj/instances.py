"""Instance and result files, and the random instance family used for benchmarks.

Instance file::

    {"prime": 2, "n": 3, "fn": ["2", "1", "1", "1", "2"], "tail": [["0", "4"], ["0", "2"]]}

Coefficients are ascending, written as canonical rational strings; ``tail``
lists f_1, ..., f_{n-1}. Result files hold ``points``, each with ``coords``
and ``mult``, sorted lexicographically by coordinates.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .arith import PrimeContext, UniPoly, parse_rat, rat_to_str
from .driver import Instance
from .glue import Projection
from .shapegb import ShapeBasis, diagnose


class InstanceFormatError(ValueError):
    pass


def _poly_from_json(data, what: str) -> UniPoly:
    if not isinstance(data, list):
        raise InstanceFormatError(f"{what} must be a list of rational strings")
    try:
        return UniPoly([parse_rat(c) for c in data])
    except (TypeError, ValueError) as exc:
        raise InstanceFormatError(f"{what}: {exc}") from None


def basis_from_dict(data: dict) -> tuple[ShapeBasis, PrimeContext]:
    """Parse without validating shape position (see :func:`instance_from_dict`)."""
    if not isinstance(data, dict):
        raise InstanceFormatError("instance must be a JSON object")
    missing = {"n", "fn", "tail"} - data.keys()
    if missing:
        raise InstanceFormatError(f"missing keys: {sorted(missing)}")
    try:
        ctx = PrimeContext(int(data.get("prime", 2)))
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None
    n = data["n"]
    tail = data["tail"]
    if not isinstance(n, int) or n < 1:
        raise InstanceFormatError("n must be a positive integer")
    if not isinstance(tail, list) or len(tail) != n - 1:
        raise InstanceFormatError(f"tail must hold n - 1 = {n - 1} polynomials")
    fn = _poly_from_json(data["fn"], "fn")
    polys = tuple(_poly_from_json(t, f"tail[{i}]") for i, t in enumerate(tail))
    return ShapeBasis(fn, polys), ctx


def instance_from_dict(data: dict) -> Instance:
    basis, ctx = basis_from_dict(data)
    return Instance(basis, ctx)


def _poly_to_json(f: UniPoly) -> list[str]:
    return [rat_to_str(c) for c in f.coeffs]


def instance_to_dict(inst: Instance | tuple[ShapeBasis, PrimeContext]) -> dict:
    basis, ctx = (inst.basis, inst.ctx) if isinstance(inst, Instance) else inst
    return {
        "prime": ctx.p,
        "n": basis.n,
        "fn": _poly_to_json(basis.fn),
        "tail": [_poly_to_json(t) for t in basis.tail],
    }


def dumps(obj: dict) -> str:
    """Canonical text form; parsing and re-dumping a canonical file is the identity."""
    return json.dumps(obj, indent=2) + "\n"


def load_instance(path: str | Path) -> Instance:
    return instance_from_dict(json.loads(Path(path).read_text()))


def save_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps(instance_to_dict(inst)))


def result_to_dict(proj: Projection, multiplicities: bool = True) -> dict:
    if not multiplicities:
        proj = proj.distinct()
    out = {"points": [{"coords": [rat_to_str(c) for c in coords], "mult": m}
                      for coords, m in proj.points]}
    if proj.A != tuple(range(len(proj.A))):
        out = {"coordinates": list(proj.A), **out}
    return out


def result_from_dict(data: dict) -> Projection:
    pts = data["points"]
    dim = len(pts[0]["coords"]) if pts else 0
    A = tuple(data.get("coordinates", range(dim)))
    return Projection(A, tuple((tuple(parse_rat(c) for c in p["coords"]), int(p["mult"]))
                               for p in pts))


# -- random family ----------------------------------------------------------

def _coefficient(rng: random.Random, p: int) -> int:
    lam = rng.randrange(100)
    while True:
        unit = rng.randrange(1, 10000)
        if unit % p:
            return p ** lam * unit


@dataclass(frozen=True)
class Generated:
    instance: Instance
    retries: int


def generate(d: int, n: int, seed: int, ctx: PrimeContext = PrimeContext(2)) -> Generated:
    """Random shape basis: deg f_n = d, every tail entry of degree d - 1.

    Every coefficient is p^lam * unit with lam uniform on 0..99 and unit
    uniform among integers in 1..9999 prime to p. Deterministic in seed;
    a sample failing validation is redrawn from a derived seed.
    """
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    for attempt in range(1000):
        rng = random.Random(f"{seed}/{attempt}")
        fn = UniPoly([_coefficient(rng, ctx.p) for _ in range(d + 1)])
        tail = tuple(UniPoly([_coefficient(rng, ctx.p) for _ in range(d)]) for _ in range(n - 1))
        basis = ShapeBasis(fn, tail)
        if not diagnose(basis):
            return Generated(Instance(basis, ctx), attempt)
    raise RuntimeError("could not draw a valid instance")  # pragma: no cover


def split_instance(rng: random.Random, d: int, n: int, ctx: PrimeContext = PrimeContext(2),
                   max_exp: int = 4) -> Instance:
    """Instance whose f_n is a product of rational linear factors.

    Roots are +-p^e * a/b with small a, b prime to p; the tail is random with
    small p-power-scaled coefficients. Redraws until the basis validates.
    """
    p = ctx.p
    small = [k for k in range(1, 12) if k % p]
    while True:
        roots = [Fraction(rng.choice((1, -1)) * rng.choice(small), rng.choice(small))
                 * Fraction(p) ** rng.randint(-max_exp, max_exp) for _ in range(d)]
        fn = UniPoly.from_roots(roots, lc=rng.choice(small) * p ** rng.randint(0, 3))
        tail = tuple(UniPoly([rng.choice((1, -1)) * rng.choice(small) * Fraction(p) ** rng.randint(-3, 3)
                              for _ in range(rng.randint(1, d))])
                     for _ in range(n - 1))
        basis = ShapeBasis(fn, tail)
        if not diagnose(basis):
            return Instance(basis, ctx)
