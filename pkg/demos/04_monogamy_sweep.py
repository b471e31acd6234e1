"""Monogamy residuals for a worked three-qubit family.

The residual tau = K - K_1 - K_2 compares the bridged one-to-rest
measure of qubit A against the pairwise terms. The inequality tau >= 0
is guaranteed for q >= 2, 0 <= s <= 1, 1 <= q*s <= 3; sweeping q past
the window shows exactly where it stops holding (and how a smaller s
pushes the failure point out).
"""

import math

import numpy as np

from qsconc import (
    GenSchmidt3,
    classify,
    gen_schmidt3,
    monogamy_residual_gen3,
    monogamy_residual_qubits,
    monogamy_window,
)

example = GenSchmidt3(
    math.sqrt(2 / 7), math.sqrt(1 / 7), math.sqrt(1 / 7), math.sqrt(3 / 7), 0.0
)

print("== closed-form vs matrix path at (q, s) = (2, 1) ==")
a = monogamy_residual_gen3(example, classify(2, 1))
b = monogamy_residual_qubits(gen_schmidt3(example), classify(2, 1))
print(f"closed form: K={a.K:.6f} parts={[round(x, 6) for x in a.K_parts]} tau={a.tau:+.2e}")
print(f"matrix path: K={b.K:.6f} parts={[round(x, 6) for x in b.K_parts]} tau={b.tau:+.2e}")

print()
print("== tau over q for three values of s ==")
qs = np.arange(2.0, 10.01, 0.5)
header = "q     " + "".join(f"s={s:<11}" for s in (1.0, 0.7, 0.4))
print(header)
for q in qs:
    cells = []
    for s in (1.0, 0.7, 0.4):
        tau = monogamy_residual_gen3(example, classify(float(q), s)).tau
        mark = " " if monogamy_window(classify(float(q), s)) else "*"
        cells.append(f"{tau:+.5f}{mark}   ")
    print(f"{q:<6.2f}" + "".join(cells))
print("(* marks points outside the guarantee window)")

print()
print("== sign-change points ==")
for s in (1.0, 0.7, 0.4):
    lo, hi = 2.0, 12.0
    if monogamy_residual_gen3(example, classify(hi, s)).tau > 0:
        print(f"s={s}: tau stays positive up to q={hi}")
        continue
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if monogamy_residual_gen3(example, classify(mid, s)).tau > 0:
            lo = mid
        else:
            hi = mid
    print(f"s={s}: tau crosses zero at q = {0.5 * (lo + hi):.3f}")

print()
print("== random four-qubit states never violate inside the window ==")
from qsconc import haar_random_pure

worst = math.inf
for seed in range(200):
    psi = haar_random_pure((2, 2, 2, 2), seed=seed)
    for q, s in [(2, 1), (3, 1), (2, 0.75)]:
        worst = min(worst, monogamy_residual_qubits(psi, classify(q, s)).tau)
print(f"minimum tau over 200 states x 3 parameter pairs: {worst:.3e}")
