"""Exception types shared across the solvers."""


class CapacityError(RuntimeError):
    """An operation exceeded its configured budget (arc cap, monomial budget, ...)."""


class SizeCapError(ValueError):
    """A graph construction exceeded the configured size cap."""
