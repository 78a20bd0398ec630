"""Exception types shared across the package."""


class CapExceeded(RuntimeError):
    """A configured resource cap (terms, group order, search size) was hit."""


class NotRational(ValueError):
    """A cyclotomic value expected to be rational has irrational components."""


class SingularMatrix(ValueError):
    """A matrix over F_2 expected to be invertible is singular."""
