"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the interval where the function is defined."""


class InvalidOrder(ValueError):
    """A derivative order other than 1 or 2 was requested."""


class BracketError(RuntimeError):
    """A root bracket does not show the expected sign change."""


class NoConvergence(RuntimeError):
    """Fixed-point iteration ran out of steps before settling."""

    def __init__(self, message, last=None, step=None, iterations=None):
        super().__init__(message)
        self.last = last
        self.step = step
        self.iterations = iterations


class HorizonError(ValueError):
    """A requested horizon needs a deeper tree than was sampled."""
