"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded a configured resource cap (CLI exit code 3)."""


class MinimalityError(ValueError):
    """A permutation is not the minimal representative of its coset."""


class UnmatchedInequalityError(ValueError):
    """An inequality cannot be written in the test-spectrum form."""
