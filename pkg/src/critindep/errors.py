"""Exception hierarchy shared by all critindep modules."""

from __future__ import annotations


class CritindepError(Exception):
    """Base class for library-specific failures."""


class FormatError(CritindepError, ValueError):
    """Malformed graph6 or edge-list input."""


class BuildError(CritindepError, ValueError):
    """An ear/pendant construction script violates its invariants."""


class ScaleError(CritindepError, RuntimeError):
    """An exhaustive routine was asked to run beyond its desk-scale bound."""
