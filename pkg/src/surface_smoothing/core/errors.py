from __future__ import annotations


class SmoothingError(Exception):
    """Base class for every error raised by surface_smoothing."""

    exit_code: int = 1


class GraphFormatError(SmoothingError, ValueError):
    """A graph file or graph document is malformed or violates a structural invariant."""

    exit_code = 2


class InputError(SmoothingError, ValueError):
    """Invalid Seifert, Brieskorn or command-line values."""

    exit_code = 2


class PreconditionError(SmoothingError, ValueError):
    """A hypothesis of the formula being evaluated does not hold for this input."""

    exit_code = 3


class IterationLimitError(SmoothingError, RuntimeError):
    """A monotone cycle-building loop ran past its safety cap."""

    exit_code = 4


class IdentityFailure(SmoothingError, RuntimeError):
    """An exact identity that must hold on every valid input failed."""

    exit_code = 4
