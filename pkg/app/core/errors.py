from __future__ import annotations


class WideSupportError(Exception):
    """Base class for every error raised by the toolkit."""


class InputError(WideSupportError, ValueError):
    """Malformed input: bad shapes, unknown points, invalid files or arguments."""


class DomainError(WideSupportError, ValueError):
    """A mathematical precondition does not hold for otherwise valid input."""


class ResourceError(WideSupportError, RuntimeError):
    """A request exceeds the configured enumeration limits."""
