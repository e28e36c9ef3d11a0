"""
Checking against explicit roots
===============================

When f_n splits over Q the tropical variety can be read off directly:
valuate each coordinate at each root. This is a convenient sanity check
for the gluing machinery.
"""

import random

from tropproj import ALL_STRATEGIES, PrimeContext, run, split_oracle
from tropproj.instances import split_instance

rng = random.Random(0)
for trial in range(20):
    inst = split_instance(rng, d=5, n=4, ctx=PrimeContext(3))
    expected = split_oracle(inst)
    assert all(run(inst, s) == expected for s in ALL_STRATEGIES)

print("last instance:")
print("  f_n =", inst.basis.fn)
for coords, mult in expected.points:
    print("  ", tuple(map(str, coords)), mult)
