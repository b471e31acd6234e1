"""Typed exceptions raised across the toolkit.

Everything derives from ValueError so callers can catch broadly; the
specific classes exist so tests and the CLI can map failures to causes
(bad input vs. parameters outside a validity window vs. numerical
breakdown).
"""


class NonSquareError(ValueError):
    """Matrix operation requires a square matrix."""


class NonHermitianError(ValueError):
    """Matrix violates the Hermitian symmetry tolerance."""


class NotPSDError(ValueError):
    """Matrix has an eigenvalue below the PSD tolerance."""


class DimensionMismatchError(ValueError):
    """Declared subsystem dimensions do not match the array shape."""


class RangeError(ValueError):
    """Scalar argument outside its admissible range."""


class NotBipartiteError(ValueError):
    """Requested split does not define a valid bipartition."""


class NotNormalizedError(ValueError):
    """State vector or coefficient set violates normalization."""


class StateFormatError(ValueError):
    """State file does not conform to the JSON state schema."""


class UnsupportedRegimeError(ValueError):
    """(q, s) falls in neither admissible sign-factor regime."""


class NotQubitSideError(ValueError):
    """Operation requires the first subsystem to be a qubit."""


class BridgeWindowError(ValueError):
    """(q, s) outside the window where the concurrence bridge identity holds."""


class RegimeABoundWindowError(ValueError):
    """(q, s) outside both validity windows of the regime-A norm bound."""


class RegimeBBoundWindowError(ValueError):
    """(q, s) outside the validity window of the regime-B norm bound."""


class NoApplicableBoundError(ValueError):
    """No norm-based lower bound covers this (q, s)."""


class ClosedFormWindowError(ValueError):
    """(q, s) outside the window where the symmetric-state closed forms hold."""


class MonogamyWindowError(ValueError):
    """(q, s) not usable for the monogamy residual (needs regime A with q > 1)."""


class NotQubitsError(ValueError):
    """Operation is defined for qubit subsystems only."""


class MixedGlobalStateError(ValueError):
    """Global state must be pure; the one-to-rest term has no computable roof."""


class BadPartitionError(ValueError):
    """Subsystem grouping is empty, overlapping, or out of range."""


class NonFiniteError(ValueError):
    """Numerical evaluation produced a non-finite value."""


class TooLargeError(ValueError):
    """Problem size exceeds the supported desk scale."""
