"""Exception types shared across the package."""


class IndexRangeError(OverflowError):
    """Reconstructed integer index does not fit in a signed 64-bit range."""


class SieveCapError(RuntimeError):
    """Prime sieve would have to grow past the configured size cap."""


class NoClosedFormError(ValueError):
    """No exact formula applies; use the Monte Carlo estimator instead."""


class DimensionCapError(ValueError):
    """Grid-based operation requested over too many torus coordinates."""


class EstimatorInconsistencyError(RuntimeError):
    """Two estimates that are required to agree failed their cross-check."""
