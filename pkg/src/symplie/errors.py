"""Shared exception base for the package."""


class SymplieError(Exception):
    """Base class for every error raised deliberately by this package."""
