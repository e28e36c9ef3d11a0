"""Tropical varieties of zero-dimensional ideals in shape position.

Exact arithmetic over Q with a p-adic valuation. The usual entry point is::

    from tropproj import Instance, ShapeBasis, UniPoly, run
    inst = Instance(ShapeBasis(UniPoly([2, 1, 1, 1, 2]), (UniPoly([0, 4]), UniPoly([0, 2]))))
    run(inst).as_dict()
"""

from .arith import PrimeContext, Rat, UniPoly, parse_rat, rat_to_str, resultant, valuation
from .driver import (
    ALL_STRATEGIES,
    ONE_PROJECTION,
    OVERLAP,
    SEQUENTIAL,
    GlueTask,
    Instance,
    Strategy,
    initial_projections,
    regular_tree,
    run,
    run_schedule,
    split_oracle,
    strategy_schedule,
)
from .errors import GlueMismatch, InvalidBasis, NonInvertible, TropError
from .glue import (
    CandidateSet,
    Projection,
    candidate_set,
    find_injective_m_slopes,
    find_injective_u_enum,
    glue,
)
from .newton import newton_polygon, trop_univariate
from .quotient import QuotientCtx, eliminant, minimal_polynomial, reversal_eliminant
from .shapegb import ShapeBasis, SlimVector, slim_transform, transform_eliminant, validate

__version__ = "0.1.0"

__all__ = [
    "PrimeContext",
    "Rat",
    "UniPoly",
    "parse_rat",
    "rat_to_str",
    "resultant",
    "valuation",
    "ALL_STRATEGIES",
    "ONE_PROJECTION",
    "OVERLAP",
    "SEQUENTIAL",
    "GlueTask",
    "Instance",
    "Strategy",
    "initial_projections",
    "regular_tree",
    "run",
    "run_schedule",
    "split_oracle",
    "strategy_schedule",
    "GlueMismatch",
    "InvalidBasis",
    "NonInvertible",
    "TropError",
    "CandidateSet",
    "Projection",
    "candidate_set",
    "find_injective_m_slopes",
    "find_injective_u_enum",
    "glue",
    "newton_polygon",
    "trop_univariate",
    "QuotientCtx",
    "eliminant",
    "minimal_polynomial",
    "reversal_eliminant",
    "ShapeBasis",
    "SlimVector",
    "slim_transform",
    "transform_eliminant",
    "validate",
]
