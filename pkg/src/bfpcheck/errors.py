"""Exception types shared across the package."""

from __future__ import annotations


class HypothesisError(ValueError):
    """A theorem-style precondition on (p, q, k) or a family parameter failed.

    The message names the violated inequality, e.g. "requires q > kp+2".
    """


class GuardExceededError(RuntimeError):
    """An enumeration would touch more edge subsets than the configured cap."""


class ConvergenceError(RuntimeError):
    """Power iteration did not reach the requested residual within the cap."""


class RouteDisagreementError(RuntimeError):
    """Exact and floating computations of the same quantity disagree.

    This always indicates an implementation bug, never a property of the
    input, so it is raised rather than folded into a report.
    """


class RootIsolationError(ArithmeticError):
    """No sign-change bracket exists for the requested root.

    Raised when the polynomial has no real root, or when its largest real
    root has even multiplicity so that no sign change can certify it.
    """


class UnresolvedRootOrderError(ArithmeticError):
    """Two largest roots could not be separated at the refinement limit.

    The roots are equal or so close that brackets of width 2^-60 still
    overlap; the ordering is reported as unresolved instead of guessed.
    """


class PositivityUndecidedError(ArithmeticError):
    """Coefficientwise positivity could not certify a polynomial difference."""
