"""Exception types shared across the package."""


class HypersupportError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HypersupportError):
    """Malformed or inconsistent input data (unknown vertex, bad schema, ...)."""


class DomainError(HypersupportError):
    """An operation was called outside its stated domain."""


class EmbeddingError(HypersupportError):
    """A rotation system does not describe a planar embedding."""
