"""Grassmann–Plücker maps from rational matrices: signs and valuations."""
import random
from collections import Counter

from hyperkit.bridge import hypersystem_of
from hyperkit.catalog import build
from hyperkit.families import supertropical_window
from hyperkit.matroids import (bases, check_exchange, check_gp, chirotope_oracle,
                               random_rational_matrix, sign_route, valuation_oracle,
                               valuation_route)

rng = random.Random(7)
A = random_rational_matrix(rng, 3, 5, p=3)
for row in A:
    print([str(x) for x in row])

P = hypersystem_of(build("signs"))
b = sign_route(P, A)
print(check_gp(b).summary())
print("chirotope:", chirotope_oracle(A))

# 3-adic valuations, grade = -v_3, in a wide supertropical window
S = supertropical_window(range(-18, 19))
v = valuation_route(S, A, 3)
print(check_gp(v).summary())
print(check_exchange(v))
print("bases:", bases(v))

# where leading terms tie the supertropical value is a ghost
kinds = Counter()
for t, o in valuation_oracle(A, 3).items():
    kinds["cancelled" if o["cancelled"] else "ties" if o["ties"] > 1 else "clean"] += 1
print(kinds)
