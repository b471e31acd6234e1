"""Polygon inequalities among marginal entanglements.

In any multipartite pure state, each subsystem's one-to-rest measure is
bounded by the sum of all the others (for q >= 1, q*s >= 1). A grouped
variant bounds a block's measure by its members' marginals.
"""

import math

import numpy as np

from qsconc import (
    PureState,
    classify,
    haar_random_pure,
    marginal_cqs,
    polygon_check,
    polygon_group_check,
)


def ghz(n):
    v = np.zeros(2**n, dtype=complex)
    v[0] = v[-1] = 1 / math.sqrt(2)
    return PureState((2,) * n, v)


def w_state():
    v = np.zeros(8, dtype=complex)
    v[1] = v[2] = v[4] = 1 / math.sqrt(3)
    return PureState((2, 2, 2), v)


p = classify(2, 1)

print("== marginals of named three-qubit states ==")
for label, psi in [("GHZ", ghz(3)), ("W", w_state())]:
    marg = [marginal_cqs(psi, j, p) for j in range(3)]
    print(f"{label}: marginals {[round(m, 6) for m in marg]}")

print()
print("== polygon check on random states (mixed local dimensions) ==")
rng = np.random.default_rng(5)
checked = violated = 0
for seed in range(300):
    n = 3 + seed % 2
    dims = tuple(int(d) for d in rng.integers(2, 5, size=n))
    psi = haar_random_pure(dims, seed=seed)
    rep = polygon_check(psi, p)
    checked += 1
    violated += len(rep.violations)
print(f"{checked} random states checked, {violated} violations")

print()
print("== grouped version on GHZ(4): block of two vs the rest ==")
rep = polygon_group_check(ghz(4), [0, 1], p)
print(f"block term {rep.marginals[0]:.6f} <= sum of member marginals "
      f"{sum(rep.marginals[1:]):.6f} -> ok={rep.ok}")

print()
print("== a qutrit example ==")
psi = haar_random_pure((3, 3, 3), seed=11)
rep = polygon_check(psi, classify(2, 2))
print(f"marginals {[round(m, 5) for m in rep.marginals]}; violations: {rep.violations}")
