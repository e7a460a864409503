"""Exception types shared across the package."""


class HlzError(Exception):
    """Base class for numeric and budget failures (CLI exit code 3)."""


class BudgetError(HlzError):
    """A configured resource budget (sieve size, quadrature height) would be exceeded."""


class BracketError(HlzError):
    """A root bracket could not be established after the widen-and-retry step."""


class NearZeroError(HlzError):
    """A pointwise check was requested too close to a zero of Z."""


class ChordNotFoundError(HlzError):
    """No chord with the requested angle was found at scan resolution."""


class CheckpointFormatError(HlzError):
    """Checkpoint file exists but its header or rows do not match this run."""
