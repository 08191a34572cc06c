from surface_smoothing.core.config import (
    EnumerationSettings,
    LimitSettings,
    OutputSettings,
    QuotientSettings,
    SmoothingConfig,
)
from surface_smoothing.core.errors import (
    GraphFormatError,
    IdentityFailure,
    InputError,
    IterationLimitError,
    PreconditionError,
    SmoothingError,
)

__all__ = [
    "SmoothingConfig",
    "LimitSettings",
    "OutputSettings",
    "EnumerationSettings",
    "QuotientSettings",
    "SmoothingError",
    "GraphFormatError",
    "InputError",
    "PreconditionError",
    "IterationLimitError",
    "IdentityFailure",
]
