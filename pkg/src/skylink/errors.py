"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: parse and input problems
exit 2, resource limits exit 3.
"""

from __future__ import annotations


class SkylinkError(Exception):
    """Base class for all package errors."""


class ParseError(SkylinkError):
    """Malformed braid word, PD code, or event text."""


class PlanarityError(ParseError):
    """Crossing/arc incidence does not embed in the plane."""


class ResourceLimitError(SkylinkError):
    """A configured crossing or size limit was exceeded."""


class IntegrityError(SkylinkError):
    """Internal consistency violation (d*d != 0, dimension mismatch,
    convention-tag mismatch).  Signals a construction bug, not bad input."""


class DegenerateInputError(SkylinkError):
    """Geometrically degenerate input, e.g. two identical events."""


class GenericityError(SkylinkError):
    """No generic projection direction found; the event pair sits too close
    to the null boundary for a stable diagram."""


class HypothesisViolationError(SkylinkError):
    """The diagram is not a valid sky pair (wrong component count or
    winding), so the homology decision procedures refuse to run."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
