"""
Error hierarchy for the distributed signaling lab.
Every domain failure derives from DSPError; argument-shaped failures are also ValueErrors.
"""

from typing import Optional


class DSPError(Exception):
    """Root of all domain errors raised by the package."""


class InstanceError(DSPError, ValueError):
    """An instance violates one of its invariants."""


class SchemaError(InstanceError):
    """A JSON document does not match the expected shape."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")


class PartitionError(DSPError, ValueError):
    """Malformed partition or ground-set mismatch."""


class BundleError(DSPError, ValueError):
    """Bundle-level arithmetic is undefined (zero probability mass)."""


class ProfileError(DSPError, ValueError):
    """A strategy profile is not feasible for its instance."""


class LocalExpertError(DSPError, ValueError):
    """An algorithm restricted to local experts met another kind of mediator."""

    def __init__(self, mediator: int, message: Optional[str] = None):
        self.mediator = mediator
        super().__init__(message or f"mediator {mediator} is not a local expert")


class PreconditionError(DSPError, ValueError):
    """An operation was called outside its documented domain."""


class CapExceededError(DSPError):
    """An enumeration would exceed a configured limit."""
