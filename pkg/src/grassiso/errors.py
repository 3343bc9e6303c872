"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed partition or skew-shape text."""


class DomainError(ValueError):
    """An operation was applied outside the inputs it is defined on."""


class ResourceBoundError(RuntimeError):
    """A search or enumeration would exceed its configured size bound."""
