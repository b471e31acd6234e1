"""Monogamy residuals and entanglement polygon inequalities.

Polygon checks: in any multipartite pure state, each one-to-rest
marginal measure is at most the sum of all the others (regime A). The
group variant bounds the measure across a named block partition by the
sum of the block members' marginals.

Monogamy (qubits): the one-to-rest normalized measure dominates the sum
of the pairwise normalized measures. The guarantee is proven for
q >= 2, 0 <= s <= 1, 1 <= q*s <= 3 (``monogamy_window``); the residual
itself is computed for any q > 1 so sweeps can map where the inequality
stops holding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import measures, states
from .errors import (
    BadPartitionError,
    MixedGlobalStateError,
    MonogamyWindowError,
    NotQubitsError,
    UnsupportedRegimeError,
)
from .measures import ParamPair, Regime


@dataclass(frozen=True)
class PolygonReport:
    marginals: list[float]
    violations: list[int]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class MonogamyReport:
    K: float
    K_parts: list[float]
    tau: float


def _require_regime_a(p: ParamPair) -> None:
    if p.regime is not Regime.A:
        raise UnsupportedRegimeError(
            f"(q, s) = ({p.q}, {p.s}) must satisfy q >= 1 and q*s >= 1"
        )


def marginal_cqs(psi: states.PureState, j: int, p: ParamPair) -> float:
    """One-to-rest measure of subsystem j: functional of its reduced state."""
    _require_regime_a(p)
    if not 0 <= j < psi.n_parties:
        raise IndexError(f"subsystem {j} out of range for {psi.n_parties} parties")
    rho_j = states.reduced_state(psi, j)
    return measures.unified_functional(rho_j, p)


def polygon_check(psi: states.PureState, p: ParamPair, tol: float = 1e-9) -> PolygonReport:
    """Verify every one-to-rest marginal against the sum of the others."""
    _require_regime_a(p)
    n = psi.n_parties
    if n < 3:
        raise BadPartitionError(f"polygon check needs n >= 3 parties, got {n}")
    marg = [marginal_cqs(psi, j, p) for j in range(n)]
    total = sum(marg)
    violations = [j for j in range(n) if marg[j] > total - marg[j] + tol]
    return PolygonReport(marg, violations)


def polygon_group_check(psi: states.PureState, group, p: ParamPair,
                        tol: float = 1e-9) -> PolygonReport:
    """Verify the block measure across group|rest against the block marginals.

    ``group`` lists the subsystem indices forming the first block; the
    report's marginals are [C(group|rest), C(A_1|..), ..., C(A_m|..)] and
    a violation is flagged under index 0.
    """
    _require_regime_a(p)
    group = [int(i) for i in group]
    n = psi.n_parties
    if not group or len(set(group)) != len(group):
        raise BadPartitionError(f"group {group} is empty or repeats an index")
    if any(i < 0 or i >= n for i in group):
        raise BadPartitionError(f"group {group} out of range for {n} parties")
    if len(group) == n:
        raise BadPartitionError("group must leave at least one subsystem outside")
    lhs = measures.unified_functional(states.reduced_state(psi, group), p)
    parts = [marginal_cqs(psi, i, p) for i in group]
    violations = [0] if lhs > sum(parts) + tol else []
    return PolygonReport([lhs] + parts, violations)


def monogamy_window(p: ParamPair) -> bool:
    """Window where the monogamy inequality is guaranteed."""
    return p.q >= 2 and 0 <= p.s <= 1 and 1 <= p.q * p.s <= 3


def _require_monogamy_params(p: ParamPair) -> None:
    if p.q <= 1:
        raise MonogamyWindowError(
            f"monogamy residual needs q > 1, got (q, s) = ({p.q}, {p.s})"
        )


def _as_pure_qubits(state) -> states.PureState:
    if isinstance(state, states.PureState):
        psi = state
    elif isinstance(state, states.DensityMatrix):
        w, v = np.linalg.eigh(state.matrix)
        if w.size > 1 and w[-2] > 1e-9:
            raise MixedGlobalStateError(
                "global state is mixed; the one-to-rest term needs a pure input"
            )
        psi = states.PureState(state.dims, v[:, -1] / np.linalg.norm(v[:, -1]))
    else:
        raise TypeError(f"expected a state, got {type(state).__name__}")
    if any(d != 2 for d in psi.dims):
        raise NotQubitsError(f"all subsystems must be qubits, dims={psi.dims}")
    return psi


def monogamy_residual_qubits(state, p: ParamPair) -> MonogamyReport:
    """Residual tau = K - sum K_i for an n-qubit pure state.

    K is the bridged one-to-rest concurrence of qubit 0; each K_i bridges
    the two-qubit mixed-state concurrence of the reduced pair (0, i).
    """
    _require_monogamy_params(p)
    psi = _as_pure_qubits(state)
    n = psi.n_parties
    if n < 2:
        raise NotQubitsError("need at least two qubits")
    c_rest = measures.concurrence_pure(psi, split=0)
    k = measures.concurrence_bridge(min(c_rest, 1.0), p)
    parts = []
    for i in range(1, n):
        rho_pair = psi.projector() if n == 2 else states.reduced_state(psi, [0, i])
        c_pair = measures.wootters_concurrence(rho_pair)
        parts.append(measures.concurrence_bridge(c_pair, p))
    return MonogamyReport(k, parts, k - sum(parts))


def gen3_concurrences(params: states.GenSchmidt3) -> tuple[float, float, float]:
    """Analytic concurrences (A|BC, A|B, A|C) of a generalized-Schmidt state."""
    l0, l1, l2, l3, _ = params.lams
    c_abc = math.sqrt(max(0.0, 4.0 * l0 * l0 * (1.0 - l0 * l0 - l1 * l1)))
    return c_abc, 2.0 * l0 * l2, 2.0 * l0 * l3


def monogamy_residual_gen3(params: states.GenSchmidt3, p: ParamPair) -> MonogamyReport:
    """Closed-form residual for the generalized-Schmidt three-qubit family."""
    _require_monogamy_params(p)
    c_abc, c_ab, c_ac = gen3_concurrences(params)
    k = measures.concurrence_bridge(min(c_abc, 1.0), p)
    k1 = measures.concurrence_bridge(min(c_ab, 1.0), p)
    k2 = measures.concurrence_bridge(min(c_ac, 1.0), p)
    return MonogamyReport(k, [k1, k2], k - k1 - k2)
