"""State construction and validation.

Pure states are normalized amplitude vectors tagged with their subsystem
dimensions; density matrices are trace-one Hermitian PSD operators with
the same tagging. Schmidt decomposition accepts any grouping of the
subsystems into two blocks. Random sampling is seed-reproducible: every
sampler takes an explicit seed and touches no global RNG state.

The JSON state-file schema consumed by the CLI is::

    {"kind": "pure" | "density",
     "dims": [d1, ..., dn],
     "data": [[re, im], ...]}      # flat, row-major

with len(data) == prod(dims) for pure states and prod(dims)**2 for
density matrices.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatchError,
    NotBipartiteError,
    NotNormalizedError,
    NotPSDError,
    RangeError,
    StateFormatError,
)

NORM_TOL = 1e-9


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector over subsystems of dimensions ``dims``."""

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        object.__setattr__(self, "amplitudes", amps)
        if any(d < 1 for d in self.dims):
            raise DimensionMismatchError(f"invalid dims {self.dims}")
        if math.prod(self.dims) != amps.size:
            raise DimensionMismatchError(
                f"dims {self.dims} need {math.prod(self.dims)} amplitudes, got {amps.size}"
            )
        nrm = float(np.sum(np.abs(amps) ** 2))
        if abs(nrm - 1.0) > NORM_TOL:
            raise NotNormalizedError(f"sum |amplitude|^2 = {nrm!r}, expected 1")

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    def projector(self) -> np.ndarray:
        v = self.amplitudes
        return np.outer(v, v.conj())

    def to_density(self) -> "DensityMatrix":
        return DensityMatrix(self.dims, self.projector())


@dataclass(frozen=True)
class DensityMatrix:
    """Trace-one Hermitian PSD operator over subsystems ``dims``."""

    dims: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        side = math.prod(self.dims)
        if m.shape != (side, side):
            raise DimensionMismatchError(
                f"dims {self.dims} need a {side}x{side} matrix, got {m.shape}"
            )
        if np.max(np.abs(m - m.conj().T)) > 1e-9:
            raise NotNormalizedError("matrix is not Hermitian within 1e-9")
        tr = float(np.trace(m).real)
        if abs(tr - 1.0) > 1e-9:
            raise NotNormalizedError(f"trace = {tr!r}, expected 1")
        w = np.linalg.eigvalsh(linalg.hermitianize(m))
        if w[0] < -1e-9:
            raise NotPSDError(f"eigenvalue {w[0]:.3e} below PSD tolerance")

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    def eigenvalues(self) -> np.ndarray:
        return linalg.hermitian_eigenvalues(self.matrix)


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Nonincreasing probability vector of squared Schmidt coefficients."""

    values: np.ndarray
    rank: int = field(default=0)

    def __post_init__(self):
        v = np.sort(np.asarray(self.values, dtype=float))[::-1].copy()
        v[np.abs(v) < linalg.EIGENVALUE_CLAMP] = 0.0
        object.__setattr__(self, "values", v)
        if v.size and (v[-1] < 0 or v[0] > 1 + NORM_TOL):
            raise RangeError("Schmidt values must lie in [0, 1]")
        if abs(float(np.sum(v)) - 1.0) > NORM_TOL:
            raise NotNormalizedError(f"Schmidt values sum to {float(np.sum(v))!r}")
        object.__setattr__(self, "rank", int(np.count_nonzero(v > 0)))


@dataclass(frozen=True)
class GenSchmidt3:
    """Generalized-Schmidt parameters of a three-qubit pure state.

    Amplitude convention: lam0..lam4 are nonnegative amplitudes with
    sum(lam_i**2) == 1; phi is the phase on the |100> term.
    """

    lam0: float
    lam1: float
    lam2: float
    lam3: float
    lam4: float
    phi: float = 0.0

    def __post_init__(self):
        lams = self.lams
        if any(l < 0 for l in lams):
            raise RangeError("generalized-Schmidt amplitudes must be nonnegative")
        s = sum(l * l for l in lams)
        if abs(s - 1.0) > NORM_TOL:
            raise NotNormalizedError(f"sum lam_i^2 = {s!r}, expected 1")

    @property
    def lams(self) -> tuple[float, ...]:
        return (self.lam0, self.lam1, self.lam2, self.lam3, self.lam4)


def _group_coefficient_matrix(psi: PureState, split) -> np.ndarray:
    """Reshape amplitudes into the (group, rest) coefficient matrix."""
    if isinstance(split, (int, np.integer)):
        group = [int(split)]
    else:
        group = [int(i) for i in split]
    n = psi.n_parties
    if not group or len(set(group)) != len(group):
        raise NotBipartiteError(f"split {group} is empty or repeats an index")
    if any(i < 0 or i >= n for i in group):
        raise NotBipartiteError(f"split {group} out of range for {n} subsystems")
    rest = [i for i in range(n) if i not in group]
    if not rest:
        raise NotBipartiteError("split keeps every subsystem; nothing to trace")
    t = psi.amplitudes.reshape(psi.dims)
    t = np.transpose(t, group + rest)
    da = math.prod(psi.dims[i] for i in group)
    return t.reshape(da, -1)


def schmidt(psi: PureState, split=0) -> SchmidtSpectrum:
    """Schmidt spectrum across a bipartition.

    ``split`` is a subsystem index or a sequence of indices forming one
    block; the remaining subsystems form the other. Returns the squared
    singular values of the coefficient matrix, sorted descending.
    """
    m = _group_coefficient_matrix(psi, split)
    sv = np.linalg.svd(m, compute_uv=False)
    return SchmidtSpectrum(sv**2)


def reduced_state(psi: PureState, split) -> np.ndarray:
    """Reduced density matrix of the ``split`` block of a pure state."""
    m = _group_coefficient_matrix(psi, split)
    return m @ m.conj().T


def max_entangled(d: int) -> PureState:
    """(1/sqrt(d)) sum_i |ii> on C^d x C^d."""
    if d < 2:
        raise RangeError(f"need d >= 2, got {d}")
    v = np.zeros(d * d, dtype=complex)
    v[:: d + 1] = 1 / math.sqrt(d)
    return PureState((d, d), v)


def isotropic(f: float, d: int) -> DensityMatrix:
    """Isotropic state with fidelity ``f`` to the maximally entangled state."""
    if not 0.0 <= f <= 1.0:
        raise RangeError(f"fidelity must be in [0, 1], got {f}")
    if d < 2:
        raise RangeError(f"need d >= 2, got {d}")
    p = max_entangled(d).projector()
    eye = np.eye(d * d, dtype=complex)
    rho = (1.0 - f) / (d * d - 1) * (eye - p) + f * p
    return DensityMatrix((d, d), rho)


def werner(w: float, d: int) -> DensityMatrix:
    """Werner state with antisymmetric weight ``w`` on C^d x C^d.

    Built from |Phi_ik^+-> = (|ik> +- |ki>)/sqrt(2): weight 2(1-w)/(d(d+1))
    on each symmetric basis state and 2w/(d(d-1)) on each antisymmetric one.
    """
    if not 0.0 <= w <= 1.0:
        raise RangeError(f"w must be in [0, 1], got {w}")
    if d < 2:
        raise RangeError(f"need d >= 2, got {d}")
    rho = np.zeros((d * d, d * d), dtype=complex)
    sym_w = 2.0 * (1.0 - w) / (d * (d + 1))
    asym_w = 2.0 * w / (d * (d - 1))
    for i in range(d):
        v = np.zeros(d * d, dtype=complex)
        v[i * d + i] = 1.0
        rho += sym_w * np.outer(v, v.conj())
    for i in range(d):
        for k in range(i + 1, d):
            plus = np.zeros(d * d, dtype=complex)
            plus[i * d + k] = plus[k * d + i] = 1 / math.sqrt(2)
            minus = np.zeros(d * d, dtype=complex)
            minus[i * d + k] = 1 / math.sqrt(2)
            minus[k * d + i] = -1 / math.sqrt(2)
            rho += sym_w * np.outer(plus, plus.conj())
            rho += asym_w * np.outer(minus, minus.conj())
    return DensityMatrix((d, d), rho)


def gen_schmidt3(params: GenSchmidt3) -> PureState:
    """Three-qubit state lam0|000> + lam1 e^{i phi}|100> + lam2|101> + lam3|110> + lam4|111>."""
    l0, l1, l2, l3, l4 = params.lams
    v = np.zeros(8, dtype=complex)
    v[0b000] = l0
    v[0b100] = l1 * np.exp(1j * params.phi)
    v[0b101] = l2
    v[0b110] = l3
    v[0b111] = l4
    return PureState((2, 2, 2), v)


def haar_random_pure(dims, seed: int) -> PureState:
    """Pure state drawn from the unitarily invariant measure."""
    dims = tuple(int(d) for d in dims)
    rng = np.random.default_rng(seed)
    n = math.prod(dims)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v /= np.linalg.norm(v)
    return PureState(dims, v)


def haar_random_unitary(d: int, seed: int) -> np.ndarray:
    """Haar-distributed d x d unitary (QR of a complex Gaussian, phase-fixed)."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_mixed(dims, rank: int, seed: int) -> DensityMatrix:
    """Seeded mixed state: Dirichlet(1,..,1) mixture of Haar pure states."""
    dims = tuple(int(d) for d in dims)
    n = math.prod(dims)
    if not 1 <= rank <= n:
        raise RangeError(f"rank must be in [1, {n}], got {rank}")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(rank))
    rho = np.zeros((n, n), dtype=complex)
    for p in weights:
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        v /= np.linalg.norm(v)
        rho += p * np.outer(v, v.conj())
    rho = linalg.hermitianize(rho)
    rho /= np.trace(rho).real
    return DensityMatrix(dims, rho)


def load_state_json(path) -> PureState | DensityMatrix:
    """Load a state from the JSON schema; errors name the violated invariant."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StateFormatError(f"not valid JSON: {exc}") from exc
    for key in ("kind", "dims", "data"):
        if key not in doc:
            raise StateFormatError(f"missing field {key!r}")
    kind = doc["kind"]
    if kind not in ("pure", "density"):
        raise StateFormatError(f"kind must be 'pure' or 'density', got {kind!r}")
    dims = tuple(int(d) for d in doc["dims"])
    if not dims or any(d < 1 for d in dims):
        raise StateFormatError(f"dims must be positive integers, got {doc['dims']}")
    try:
        pairs = np.asarray(doc["data"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise StateFormatError(f"data is not numeric: {exc}") from exc
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise StateFormatError("data must be a flat list of [re, im] pairs")
    flat = pairs[:, 0] + 1j * pairs[:, 1]
    side = math.prod(dims)
    if kind == "pure":
        if flat.size != side:
            raise StateFormatError(f"pure state needs {side} entries, got {flat.size}")
        return PureState(dims, flat)
    if flat.size != side * side:
        raise StateFormatError(
            f"density matrix needs {side * side} entries, got {flat.size}"
        )
    return DensityMatrix(dims, flat.reshape(side, side))


def save_state_json(state: PureState | DensityMatrix, path) -> None:
    """Write a state in the JSON schema read by ``load_state_json``."""
    if isinstance(state, PureState):
        kind, flat = "pure", state.amplitudes
    else:
        kind, flat = "density", state.matrix.reshape(-1)
    doc = {
        "kind": kind,
        "dims": list(state.dims),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh)
