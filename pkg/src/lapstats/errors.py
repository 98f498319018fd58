"""Exception types shared across the package.

The CLI maps these onto exit codes: bad input is 2, resource guards and
solver caps are 3. Anything else escaping is a bug.
"""


class InputError(ValueError):
    """Invalid user-supplied data: malformed graphs, bad family parameters,
    unparseable files, preconditions violated by the caller."""


class GuardExceeded(RuntimeError):
    """A size guard on an enumeration routine was exceeded, or a retry
    budget ran out. Never silently truncated."""


class ConvergenceError(RuntimeError):
    """The iterative eigensolver hit its sweep cap before reaching the
    requested off-diagonal tolerance."""
