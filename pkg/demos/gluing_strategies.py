"""
Gluing strategies
=================

Every strategy produces the same multiset of points; they differ in how
large the candidate sets get and how much work can run in parallel.
"""

import time

from tropproj import ALL_STRATEGIES, PrimeContext, regular_tree, run, strategy_schedule
from tropproj.instances import generate

# the shape of each schedule on five coordinates
for strat in ALL_STRATEGIES + (regular_tree(3),):
    print(strat)
    for batch in strategy_schedule(5, strat):
        print("   ", [t.inputs for t in batch])

# a random instance of degree 8 in five variables, 3-adically
inst = generate(8, 5, seed=4, ctx=PrimeContext(3)).instance
results = {}
for strat in ALL_STRATEGIES:
    t0 = time.perf_counter()
    results[str(strat)] = run(inst, strat, threads=2)
    print(f"{str(strat):16s} {time.perf_counter() - t0:7.3f} s")

first = next(iter(results.values()))
assert all(r == first for r in results.values())
for coords, mult in first.points:
    print(*map(str, coords), "x", mult)
