"""Core settings and error types."""

from .config import Settings, get_settings, reset_settings, use_settings
from .exceptions import (
    HammingSearchError,
    DomainError,
    DimensionError,
    EmptyInputError,
    PreconditionError,
    ClassSizeError,
    UnsupportedCaseError,
    VerificationError,
)

__all__ = [
    # Settings
    'Settings',
    'get_settings',
    'reset_settings',
    'use_settings',
    # Errors
    'HammingSearchError',
    'DomainError',
    'DimensionError',
    'EmptyInputError',
    'PreconditionError',
    'ClassSizeError',
    'UnsupportedCaseError',
    'VerificationError',
]
