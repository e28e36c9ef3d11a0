"""
A small tropical variety, step by step
======================================

Four points in (Q^*)^3 are cut out by
2 + x3 + x3^2 + x3^3 + 2 x3^4 = 0, x2 = 2 x3, x1 = 4 x3.
We find their 2-adic valuation vectors without ever computing a root.
"""

from tropproj import Instance, PrimeContext, ShapeBasis, UniPoly
from tropproj.driver import initial_projections
from tropproj.glue import candidate_set, find_injective_u_enum, glue
from tropproj.newton import newton_polygon
from tropproj.shapegb import slim_transform, transform_eliminant

fn = UniPoly([2, 1, 1, 1, 2])
basis = ShapeBasis(fn, (UniPoly([0, 4]), UniPoly([0, 2])))
inst = Instance(basis, PrimeContext(2))

# the Newton polygon of f3 has slopes -1, 0, 1, so the roots have
# valuations 1, 0 (twice) and -1
print("vertices:", newton_polygon(fn, inst.ctx).vertices)

# one projection per coordinate, each with multiplicities summing to 4
p0, p1, p2 = initial_projections(inst)
for p in (p0, p1, p2):
    print(p.A, p)

# gluing coordinates 0 and 1: nine candidates, one injective linear form
T = candidate_set([p0, p1])
u = find_injective_u_enum(T, 0, 3)
print(len(T), "candidates; slim vector", u.u)
print("transformed f_0:", slim_transform(basis, u).tail[0])
print("its eliminant:", transform_eliminant(basis, u))

p01 = glue(basis, inst.ctx, [p0, p1])
print("glued:", p01)

# attaching the last coordinate gives the whole variety
print("result:", glue(basis, inst.ctx, [p01, p2]))
