"""Non-boolean result markers for bounded computations.

Desk-scale routines can hit their configured bounds (cycle-count caps,
recognizer vertex limits, enumeration limits).  Rather than coercing those
outcomes into booleans or raising, the affected operations return one of the
singletons below.  The markers deliberately refuse ``bool()`` so that a bound
hit can never be silently mistaken for a negative answer.
"""

from __future__ import annotations


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name: str) -> None:
        self._name = name

    def __repr__(self) -> str:
        return self._name

    def __bool__(self) -> bool:
        raise TypeError(f"{self._name} is not a boolean; test identity instead")

    def __reduce__(self):
        # Pickling (used by the multi-worker scan) must preserve identity.
        return (_resolve, (self._name,))


#: A predicate whose truth could not be decided within the configured bounds.
UNDECIDED = _Marker("UNDECIDED")

#: A counter exceeded its cap.
OVERFLOW = _Marker("OVERFLOW")

#: A set-valued invariant that was skipped because the graph is too large.
UNCOMPUTED = _Marker("UNCOMPUTED")

_BY_NAME = {"UNDECIDED": UNDECIDED, "OVERFLOW": OVERFLOW, "UNCOMPUTED": UNCOMPUTED}


def _resolve(name: str) -> _Marker:
    return _BY_NAME[name]


def is_marker(value: object) -> bool:
    """True when ``value`` is one of the sentinel markers."""
    return isinstance(value, _Marker)
