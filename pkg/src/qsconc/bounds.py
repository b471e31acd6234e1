"""PPT/realignment detection and the analytic lower bounds built on them.

``detect`` computes both reshuffle trace norms; a norm above 1 certifies
entanglement. The two bound families turn the larger norm into a lower
bound on the (q,s)-concurrence:

  regime A (eps=+1), valid for (q >= 2 and s >= 1.1391) or (s >= 1 and
  q >= 2.4721):

      [(1 - m**(s(1-q))) / (1 - m**(-s))] *
      [1 - (1 - (N-1)^2 / (m(m-1)))**s]

  regime B (eps=-1), valid for 0 < q < 1 with both s and q*s below
  0.9066 (the published statement and its derivation disagree on which
  product is constrained; both are enforced):

      [(m**(s(1-q)) - 1) / (m**s - 1)] * (N**s - 1)

with N = max of the two norms and m = min(dA, dB).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import linalg, states
from .errors import (
    DimensionMismatchError,
    NoApplicableBoundError,
    RegimeABoundWindowError,
    RegimeBBoundWindowError,
)
from .measures import ParamPair, Regime

DETECTION_TOL = 1e-9

REGIME_A_MIN_S = 1.1391
REGIME_A_MIN_Q = 2.4721
REGIME_B_MAX_S = 0.9066


class DetectedBy(enum.Enum):
    PPT = "ppt"
    REALIGNMENT = "realignment"
    BOTH = "both"
    NONE = "none"


@dataclass(frozen=True)
class BoundReport:
    ppt_norm: float
    realign_norm: float
    detected_by: DetectedBy
    lower_bound: float | None
    m: int

    @property
    def max_norm(self) -> float:
        return max(self.ppt_norm, self.realign_norm)


def detect(rho: states.DensityMatrix) -> BoundReport:
    """Compute both reshuffle norms and which criterion (if any) fires."""
    if rho.n_parties != 2:
        raise DimensionMismatchError(f"need a bipartite state, dims={rho.dims}")
    da, db = rho.dims
    ppt = linalg.trace_norm(linalg.partial_transpose(rho.matrix, (da, db)))
    rea = linalg.trace_norm(linalg.realign(rho.matrix, (da, db)))
    ppt_hit = ppt > 1.0 + DETECTION_TOL
    rea_hit = rea > 1.0 + DETECTION_TOL
    if ppt_hit and rea_hit:
        by = DetectedBy.BOTH
    elif ppt_hit:
        by = DetectedBy.PPT
    elif rea_hit:
        by = DetectedBy.REALIGNMENT
    else:
        by = DetectedBy.NONE
    return BoundReport(ppt, rea, by, None, min(da, db))


def in_regime_a_window(p: ParamPair) -> bool:
    return p.regime is Regime.A and (
        (p.q >= 2 and p.s >= REGIME_A_MIN_S) or (p.s >= 1 and p.q >= REGIME_A_MIN_Q)
    )


def in_regime_b_window(p: ParamPair) -> bool:
    return (
        p.regime is Regime.B
        and 0 < p.s < REGIME_B_MAX_S
        and 0 < p.q * p.s < REGIME_B_MAX_S
    )


def bound_value_regime_a(norm: float, m: int, p: ParamPair) -> float:
    """Regime-A bound from a known max norm; clamped to 0 for norm <= 1."""
    if not in_regime_a_window(p):
        raise RegimeABoundWindowError(
            f"(q, s) = ({p.q}, {p.s}) outside both regime-A windows: "
            f"need q >= 2 with s >= {REGIME_A_MIN_S} or s >= 1 with q >= {REGIME_A_MIN_Q}"
        )
    if norm <= 1.0:
        return 0.0
    pref = (1.0 - float(m) ** (p.s * (1.0 - p.q))) / (1.0 - float(m) ** (-p.s))
    inner = 1.0 - (norm - 1.0) ** 2 / (m * (m - 1))
    return max(0.0, pref * (1.0 - inner**p.s))


def bound_value_regime_b(norm: float, m: int, p: ParamPair) -> float:
    """Regime-B bound from a known max norm; clamped to 0 for norm <= 1."""
    if not in_regime_b_window(p):
        failed = []
        if not (0 < p.q < 1):
            failed.append(f"q={p.q} not in (0, 1)")
        if not (0 < p.s < REGIME_B_MAX_S):
            failed.append(f"s={p.s} not in (0, {REGIME_B_MAX_S})")
        if not (0 < p.q * p.s < REGIME_B_MAX_S):
            failed.append(f"q*s={p.q * p.s} not in (0, {REGIME_B_MAX_S})")
        raise RegimeBBoundWindowError(
            "outside the regime-B bound window: " + "; ".join(failed)
        )
    if norm <= 1.0:
        return 0.0
    pref = (float(m) ** (p.s * (1.0 - p.q)) - 1.0) / (float(m) ** p.s - 1.0)
    return max(0.0, pref * (norm**p.s - 1.0))


def bound_value_auto(norm: float, m: int, p: ParamPair) -> float:
    """Dispatch on (q, s) to whichever bound family applies."""
    if in_regime_a_window(p):
        return bound_value_regime_a(norm, m, p)
    if in_regime_b_window(p):
        return bound_value_regime_b(norm, m, p)
    raise NoApplicableBoundError(
        f"(q, s) = ({p.q}, {p.s}) is covered by neither bound family"
    )


def lower_bound_regime_a(rho: states.DensityMatrix, p: ParamPair) -> BoundReport:
    rep = detect(rho)
    val = bound_value_regime_a(rep.max_norm, rep.m, p)
    return BoundReport(rep.ppt_norm, rep.realign_norm, rep.detected_by, val, rep.m)


def lower_bound_regime_b(rho: states.DensityMatrix, p: ParamPair) -> BoundReport:
    rep = detect(rho)
    val = bound_value_regime_b(rep.max_norm, rep.m, p)
    return BoundReport(rep.ppt_norm, rep.realign_norm, rep.detected_by, val, rep.m)


def bound_auto(rho: states.DensityMatrix, p: ParamPair) -> BoundReport:
    """Route to the applicable bound family, or fail if there is none."""
    if in_regime_a_window(p):
        return lower_bound_regime_a(rho, p)
    if in_regime_b_window(p):
        return lower_bound_regime_b(rho, p)
    raise NoApplicableBoundError(
        f"(q, s) = ({p.q}, {p.s}) is covered by neither bound family"
    )


def pure_state_norm(spectrum) -> float:
    """(sum_i sqrt(lambda_i))^2, the common reshuffle norm of a pure state."""
    if isinstance(spectrum, states.SchmidtSpectrum):
        spectrum = spectrum.values
    lam = np.clip(np.asarray(spectrum, dtype=float), 0.0, None)
    return float(np.sum(np.sqrt(lam)) ** 2)
