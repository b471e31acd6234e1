"""Exact (q,s)-concurrence curves for isotropic and Werner states.

For both families the measure is the convex envelope of a scalar curve:
the minimal pure-state measure at fixed fidelity F (isotropic) or fixed
antisymmetric weight w (Werner). The curve is convex near the
separability threshold but loses convexity before the right endpoint,
so the envelope is completed by a straight segment.

Two segment constructions are provided:

* ``method="inflection"`` (default): straight line from the curve's
  inflection point to the right endpoint. This is the construction the
  published piecewise results use.
* ``method="tangent"``: straight line from the point where the chord to
  the right endpoint is tangent to the curve. This is the true convex
  envelope; it starts lower and keeps the junction kink-free.

The inflection construction is NOT convex at the junction (the curve's
slope there exceeds the chord slope), and on the segment it sits
slightly above the tangent envelope. Both stay below the raw curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import ClosedFormWindowError, NonFiniteError, RangeError

SECOND_DIFF_STEP = 1e-4
BISECT_WIDTH = 1e-6


def _require_closed_form_params(q: float, s: float) -> None:
    if not (q > 1 and q * s >= 1):
        raise ClosedFormWindowError(
            f"closed forms need q > 1 and q*s >= 1, got (q, s) = ({q}, {s})"
        )


def isotropic_gamma_delta(f: float, d: int) -> tuple[float, float]:
    """Extremal Schmidt amplitudes (gamma, delta) at fidelity f."""
    sf = math.sqrt(f)
    s1f = math.sqrt(max(0.0, 1.0 - f))
    gamma = (sf + math.sqrt(d - 1) * s1f) / math.sqrt(d)
    delta = (sf - s1f / math.sqrt(d - 1)) / math.sqrt(d)
    return gamma, delta


def isotropic_curve(f: float, q: float, s: float, d: int) -> float:
    """Minimal pure-state measure at fidelity f on C^d x C^d.

    Defined for f in [1/d, 1]; identically 0 at the separability
    threshold f = 1/d.
    """
    _require_closed_form_params(q, s)
    if d < 2:
        raise RangeError(f"need d >= 2, got {d}")
    if not 1.0 / d - 1e-12 <= f <= 1.0 + 1e-12:
        raise RangeError(f"fidelity {f} outside [1/{d}, 1]")
    gamma, delta = isotropic_gamma_delta(min(max(f, 1.0 / d), 1.0), d)
    t = gamma ** (2 * q) + (d - 1) * max(delta, 0.0) ** (2 * q)
    return 1.0 - t**s


def werner_curve(w: float, q: float, s: float) -> float:
    """Minimal pure-state measure at antisymmetric weight w.

    Defined for w in [1/2, 1]; identically 0 at w = 1/2. The reduction
    collapses to two Schmidt coefficients for every local dimension, so
    no d argument is needed.
    """
    _require_closed_form_params(q, s)
    if not 0.5 - 1e-12 <= w <= 1.0 + 1e-12:
        raise RangeError(f"w = {w} outside [1/2, 1]")
    w = min(max(w, 0.5), 1.0)
    g = 2.0 * math.sqrt(w * (1.0 - w))
    t = ((1.0 + g) / 2.0) ** q + ((1.0 - g) / 2.0) ** q
    return 1.0 - t**s


def second_difference(curve: Callable[[float], float], x: float,
                      step: float = SECOND_DIFF_STEP) -> float:
    """Central second difference (f(x+h) - 2 f(x) + f(x-h)) / h^2."""
    val = (curve(x + step) - 2.0 * curve(x) + curve(x - step)) / (step * step)
    if not math.isfinite(val):
        raise NonFiniteError(f"curve second difference at x={x} is not finite")
    return val


def find_breakpoint(curve: Callable[[float], float], domain: tuple[float, float],
                    step: float = SECOND_DIFF_STEP, samples: int = 800) -> float:
    """Largest root of the numerical second derivative inside ``domain``.

    Scans a grid for the last sign change of the central second
    difference and refines it by bisection to an interval below 1e-6.
    Returns the right endpoint if the curve stays convex.
    """
    a, b = domain
    lo, hi = a + 2 * step, b - 2 * step
    if hi <= lo:
        raise RangeError(f"domain {domain} too narrow for step {step}")
    xs = np.linspace(lo, hi, samples)
    d2 = np.array([second_difference(curve, float(x), step) for x in xs])
    signs = np.sign(d2)
    flips = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
    if flips.size == 0:
        return b
    i = int(flips[-1])
    x_lo, x_hi = float(xs[i]), float(xs[i + 1])
    f_lo = d2[i]
    while x_hi - x_lo > BISECT_WIDTH:
        mid = 0.5 * (x_lo + x_hi)
        f_mid = second_difference(curve, mid, step)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            x_lo, f_lo = mid, f_mid
        else:
            x_hi = mid
    return 0.5 * (x_lo + x_hi)


def _tangency_point(curve: Callable[[float], float], domain: tuple[float, float],
                    step: float = SECOND_DIFF_STEP) -> float:
    """Point x* where the chord to the right endpoint is tangent to the curve.

    Solves curve'(x*) = (curve(b) - curve(x*)) / (b - x*) by bisection;
    equivalently the stationary point of the chord slope.
    """
    a, b = domain
    fb = curve(b)

    def gap(x: float) -> float:
        deriv = (curve(x + step) - curve(x - step)) / (2 * step)
        return deriv - (fb - curve(x)) / (b - x)

    lo, hi = a + 2 * step, b - 2 * step
    g_lo = gap(lo)
    xs = np.linspace(lo, hi, 400)
    x_prev, g_prev = lo, g_lo
    bracket = None
    for x in xs[1:]:
        g = gap(float(x))
        if g_prev * g < 0:
            bracket = (x_prev, float(x), g_prev)
            break
        x_prev, g_prev = float(x), g
    if bracket is None:
        return b
    x_lo, x_hi, g_lo = bracket
    while x_hi - x_lo > BISECT_WIDTH:
        mid = 0.5 * (x_lo + x_hi)
        g_mid = gap(mid)
        if (g_mid > 0) == (g_lo > 0):
            x_lo, g_lo = mid, g_mid
        else:
            x_hi = mid
    return 0.5 * (x_lo + x_hi)


@dataclass(frozen=True)
class EnvelopeCurve:
    """Piecewise measure curve: zero region, analytic region, linear tail."""

    sep_threshold: float
    breakpoint: float
    slope: float
    intercept: float
    analytic: Callable[[float], float]
    right: float = 1.0

    def __call__(self, x: float) -> float:
        if not 0.0 <= x <= self.right + 1e-12:
            raise RangeError(f"x = {x} outside [0, {self.right}]")
        if x <= self.sep_threshold:
            return 0.0
        if x <= self.breakpoint:
            return self.analytic(x)
        return self.slope * min(x, self.right) + self.intercept


def build_envelope(curve: Callable[[float], float], domain: tuple[float, float],
                   sep_threshold: float, method: str = "inflection") -> EnvelopeCurve:
    """Complete a losing-convexity curve with a straight tail segment."""
    a, b = domain
    if method == "inflection":
        knot = find_breakpoint(curve, domain)
    elif method == "tangent":
        knot = _tangency_point(curve, domain)
    else:
        raise RangeError(f"unknown envelope method {method!r}")
    if knot >= b:
        step = SECOND_DIFF_STEP
        slope = (curve(b) - curve(b - step)) / step
        return EnvelopeCurve(sep_threshold, b, slope, curve(b) - slope * b, curve, b)
    slope = (curve(b) - curve(knot)) / (b - knot)
    intercept = curve(b) - slope * b
    return EnvelopeCurve(sep_threshold, knot, slope, intercept, curve, b)


@lru_cache(maxsize=128)
def isotropic_envelope(q: float, s: float, d: int,
                       method: str = "inflection") -> EnvelopeCurve:
    """Envelope of the isotropic curve over fidelity in [1/d, 1]."""
    _require_closed_form_params(q, s)

    def curve(f: float) -> float:
        return isotropic_curve(f, q, s, d)

    return build_envelope(curve, (1.0 / d, 1.0), 1.0 / d, method)


@lru_cache(maxsize=128)
def werner_envelope(q: float, s: float, method: str = "inflection") -> EnvelopeCurve:
    """Envelope of the Werner curve over weight in [1/2, 1]."""
    _require_closed_form_params(q, s)

    def curve(w: float) -> float:
        return werner_curve(w, q, s)

    return build_envelope(curve, (0.5, 1.0), 0.5, method)


def cqs_isotropic(f: float, q: float, s: float, d: int,
                  method: str = "inflection") -> float:
    """Measure of the isotropic state at fidelity f, full domain [0, 1]."""
    if not 0.0 <= f <= 1.0 + 1e-12:
        raise RangeError(f"fidelity {f} outside [0, 1]")
    return isotropic_envelope(q, s, d, method)(min(f, 1.0))


def cqs_werner(w: float, q: float, s: float, method: str = "inflection") -> float:
    """Measure of the Werner state at weight w, full domain [0, 1]."""
    if not 0.0 <= w <= 1.0 + 1e-12:
        raise RangeError(f"w = {w} outside [0, 1]")
    return werner_envelope(q, s, method)(min(w, 1.0))


@dataclass(frozen=True)
class IsotropicExtremum:
    """Candidate extremal Schmidt profile: n entries gamma^2, m entries delta^2."""

    n: int
    m_count: int
    gamma: float
    delta: float
    value: float


def isotropic_extremum_oracle(f: float, q: float, s: float, d: int) -> IsotropicExtremum:
    """Brute-force minimizer over all integer extremal Schmidt profiles.

    Independent oracle for ``isotropic_curve``: enumerates every profile
    with n entries gamma^2 and m entries delta^2 subject to
    n*gamma^2 + m*delta^2 = 1 and n*gamma + m*delta = sqrt(f*d), over
    1 <= n <= f*d and f*d <= n+m <= d, and returns the minimizing one.
    """
    _require_closed_form_params(q, s)
    if d < 2:
        raise RangeError(f"need d >= 2, got {d}")
    if not 1.0 / d < f <= 1.0 + 1e-12:
        raise RangeError(f"fidelity {f} outside (1/{d}, 1]")
    f = min(f, 1.0)
    fd = f * d
    root_fd = math.sqrt(fd)
    best: IsotropicExtremum | None = None
    for n in range(1, int(math.floor(fd + 1e-12)) + 1):
        for m in range(d - n, -1, -1):
            if n + m < fd - 1e-12:
                continue
            if m == 0:
                if abs(n - fd) > 1e-12:
                    continue
                gamma, delta = 1.0 / math.sqrt(n), 0.0
            else:
                disc = n * m * (n + m - fd)
                root = math.sqrt(max(0.0, disc))
                gamma = (n * root_fd + root) / (n * (n + m))
                delta = (m * root_fd - root) / (m * (n + m))
                if delta < -1e-12:
                    continue
                delta = max(delta, 0.0)
            value = 1.0 - (n * gamma ** (2 * q) + m * delta ** (2 * q)) ** s
            if best is None or value < best.value - 1e-15:
                best = IsotropicExtremum(n, m, gamma, delta, value)
    if best is None:
        raise NonFiniteError(f"no feasible extremal profile at f={f}, d={d}")
    return best


def reference_q_concurrence_isotropic(f: float, d: int = 3) -> float:
    """Published single-exponent (q=2) concurrence curve for isotropic states, d=3."""
    if d != 3:
        raise RangeError("reference curve is tabulated for d = 3 only")
    if not 0.0 <= f <= 1.0 + 1e-12:
        raise RangeError(f"fidelity {f} outside [0, 1]")
    if f <= 1.0 / 3.0:
        return 0.0
    if f <= 8.0 / 9.0:
        gamma, delta = isotropic_gamma_delta(f, 3)
        return 1.0 - gamma**4 - 2.0 * delta**4
    return 1.5 * f - 5.0 / 6.0


def reference_c3t_werner(w: float) -> float:
    """Published C_3^t concurrence curve for two-qubit Werner states."""
    if not 0.0 <= w <= 1.0 + 1e-12:
        raise RangeError(f"w = {w} outside [0, 1]")
    if w <= 0.5:
        return 0.0
    return (2.0 * w - 1.0) ** 2
