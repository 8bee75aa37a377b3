"""Exception types shared across the toolkit.

Each class carries the process exit code the command-line layer maps it to.
"""


class SupercurveError(Exception):
    exit_code = 1


class InvalidParameters(SupercurveError):
    """Violated input invariant (bad prime, degree mismatch, broken relation)."""
    exit_code = 2


class DegenerateParameters(SupercurveError):
    """Parameters that collapse the curve (s = 0 or t = 0)."""
    exit_code = 3


class MathematicalMismatch(SupercurveError):
    """Two routes that must agree disagreed.  This is a finding, not a crash."""
    exit_code = 4
