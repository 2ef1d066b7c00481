"""Exception types shared across the package.

Input problems (bad words, bad letter sets, out-of-range sizes) derive from
:class:`InputError`, which is a ``ValueError``.  :class:`InternalCheckError`
signals that a verified identity failed at runtime; it is a bug indicator,
never a user error, and the command line maps it to a distinct exit code.
"""

from __future__ import annotations


class InputError(ValueError):
    """Base class for all rejections of caller-supplied data."""


class EmptyWordError(InputError):
    """Raised when a word source contains no letters at all."""


class BadTokenError(InputError):
    """Raised when a word source contains a token that is not a positive integer."""


class NotDoubleOccurrenceError(InputError):
    """Raised when some letter does not occur exactly twice."""


class SigmaEmptyError(InputError):
    """Raised when a letter subset that must be non-empty is empty."""


class NotIncidentError(InputError):
    """Raised when an edge index is not incident to the vertex under discussion."""


class InvalidHamiltonianSetError(InputError):
    """Raised when a claimed Hamiltonian set fails validation against its graph."""


class ConsecutiveEdgesError(InputError):
    """Raised when an edge subset contains two consecutively indexed edges."""


class PreconditionViolatedError(InputError):
    """Raised when a structural precondition of an algorithm does not hold."""


class TooLargeError(InputError):
    """Raised when a requested exhaustive computation exceeds the size guard."""


class InternalCheckError(RuntimeError):
    """A self-check on a computed result failed.

    Every constructive routine in this package re-verifies its own output
    (projections match the expected pattern, deletions are all even, counts
    agree with the witness test).  If one of those checks ever fires the
    library state is unreliable and the process should stop loudly.
    """
