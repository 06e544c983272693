"""Exception types.

Every domain error carries a machine-readable ``code`` and a ``details``
mapping so the CLI can serialize it without inspecting the message.
"""

from __future__ import annotations


class NewtonStrataError(Exception):
    code = "NewtonStrataError"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details

    def to_json(self) -> dict:
        payload = {"error": self.code}
        payload.update(self.details)
        payload["message"] = str(self)
        return payload


class DimensionError(NewtonStrataError, ValueError):
    code = "DimensionError"


class NotDominantError(NewtonStrataError, ValueError):
    code = "NotDominant"


class ValidationError(NewtonStrataError, ValueError):
    """A tuple is not the Newton polygon of any class of the given group."""

    def __init__(self, code: str, message: str = "", **details):
        self.code = code
        super().__init__(message or code, **details)


class ReductionUnavailable(NewtonStrataError, ValueError):
    code = "ReductionUnavailable"


class PartitionMismatch(NewtonStrataError, ValueError):
    code = "PartitionMismatch"


class DiOutOfRange(NewtonStrataError, ValueError):
    code = "DiOutOfRange"


class NonIntegerDi(NewtonStrataError, ValueError):
    code = "NonIntegerDi"


class NotMinuscule(NewtonStrataError, ValueError):
    code = "NotMinuscule"


class HypothesisViolated(NewtonStrataError, ValueError):
    code = "HypothesisViolated"


class NotBasic(NewtonStrataError, ValueError):
    code = "NotBasic"


class CandidateLimitExceeded(NewtonStrataError):
    """Enumeration produced more candidates than the configured cap."""

    code = "CandidateLimitExceeded"

    def __init__(self, limit: int, partial: list):
        super().__init__(f"more than {limit} candidates", limit=limit)
        self.partial = partial


class InternalConsistencyError(NewtonStrataError, AssertionError):
    """Two independently computed quantities disagree; indicates a bug."""

    code = "InternalConsistencyError"
