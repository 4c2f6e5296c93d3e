"""Exception hierarchy.

Every domain error derives from PMSpaceError. Errors that signal rejected
input values also derive from ValueError so generic callers can catch them
idiomatically; errors that signal a failed mathematical precondition on
otherwise well-formed input derive only from PMSpaceError.
"""

from __future__ import annotations


class PMSpaceError(Exception):
    """Base class for all domain errors raised by this package."""


class InputError(PMSpaceError, ValueError):
    """Base class for rejected input values."""


# --- distribution construction -------------------------------------------

class NonMonotone(InputError):
    """Jump list is not strictly increasing in location and level."""


class NegativeLocation(InputError):
    """Jump location is negative, NaN, or otherwise not a finite point."""


class LevelOutOfRange(InputError):
    """Jump level lies outside (0, 1]."""


# --- metric / triangle arguments ------------------------------------------

class NonPositiveH(InputError):
    """Admissibility shift h must be a positive real."""


class OutOfRange(InputError):
    """Scalar t-norm argument lies outside [0, 1]."""


class NonPositiveT(InputError):
    """Neighborhood radius t must be positive."""


class QOutOfRange(InputError):
    """Contraction factor q must lie in (0, 1)."""


# --- space construction and lookups ---------------------------------------

class ShapeMismatch(InputError):
    """Matrix or pair collection does not match the point set."""


class NotAMetric(InputError):
    """Distance matrix violates a metric axiom."""


class IncompatibleTriangleFn(PMSpaceError):
    """Triangle function does not satisfy the identity this construction needs."""


class UnknownPoint(InputError):
    """Point label does not belong to the space."""


class InvalidSpace(PMSpaceError):
    """Operation requires a space that passes the axiom checks."""


class MissingPoint(InputError):
    """Map is not total on the required point set."""


class UnsupportedTriangleFn(PMSpaceError):
    """Operation is not defined for this triangle-function kind."""


class EmptySubset(InputError):
    """Subset argument must be nonempty."""


# --- Lipschitz maps and fixed points ---------------------------------------

class NotLipschitz(PMSpaceError):
    """Map fails the probabilistic 1-Lipschitz check."""


class NotContraction(PMSpaceError):
    """Map fails the contraction check; carries a witness pair."""

    def __init__(self, message: str, witness: tuple[str, str] | None = None):
        super().__init__(message)
        self.witness = witness


class KQTooLarge(PMSpaceError):
    """Certified rate requires k*q < 1."""


class NoConvergence(PMSpaceError):
    """Iteration exhausted max_iter without reaching a fixed point."""


# --- serialization ----------------------------------------------------------

class ParseError(InputError):
    """Malformed file or object, with field context in the message."""
