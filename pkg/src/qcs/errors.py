"""Exception types shared across the package."""


class QcsError(Exception):
    """Base class for all package-specific errors."""


class DegenerateTriple(QcsError, ValueError):
    """Cross-ratio reference points are not pairwise distinct."""


class DimensionMismatch(QcsError, ValueError):
    """Operands live in different (or unsupported) Hilbert-space dimensions."""


class InfinitePoint(QcsError, ValueError):
    """The point at infinity was passed where a finite label is required."""


class NotNormalized(QcsError, ValueError):
    """State amplitudes are too far from unit norm to be a construction error-free state."""


class BadSubsystem(QcsError, ValueError):
    """Partial trace asked to keep an empty, full, or out-of-range qubit set."""


class BadParams(QcsError, ValueError):
    """Coupling parameters are inconsistent or incomplete for the requested model."""


class FormulaUnavailable(QcsError, LookupError):
    """No closed-form energy expression exists for this (model, state) pair."""


class NoConvergence(QcsError, RuntimeError):
    """Iterative refinement failed to converge within its budget."""
