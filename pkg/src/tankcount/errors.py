"""Exception types shared across the package.

Validation failures (bad arguments, malformed samples, impossible
configurations) raise :class:`InputError` subclasses.  Resource or regime
failures (enumeration budget exceeded, curve points outside the admissible
region) get their own classes so callers can map them to distinct exit codes.
"""

from __future__ import annotations


class InputError(ValueError):
    """A precondition on user-supplied input was violated."""


class EmptySampleError(InputError):
    """Raised when a sample with no serials is constructed or required."""


class InsufficientSampleError(InputError):
    """Raised when an estimator needs more observations than were given."""


class TooFewSamplesError(InputError):
    """Raised when a sample cannot be split into the requested sub-samples."""


class DegenerateSplitError(InputError):
    """Raised when no sub-sample can produce an estimate to patch from."""


class InvalidSerialError(InputError):
    """Raised when a serial number lies outside the set of valid serials."""


class OversampleError(InputError):
    """Raised when more draws are requested than the population contains."""


class BudgetExceededError(RuntimeError):
    """Raised when exhaustive enumeration would exceed the subset budget."""

    def __init__(self, subsets: int, budget: int):
        self.subsets = subsets
        self.budget = budget
        super().__init__(
            f"enumeration needs {subsets} subsets, budget is {budget}"
        )


class RegimeError(ValueError):
    """Raised when a growth-regime curve contains inadmissible points."""

    def __init__(self, offending: list[int], reason: str):
        self.offending = offending
        self.reason = reason
        super().__init__(f"invalid curve points at k={offending}: {reason}")
