class MonoidError(ValueError):
    """Raised when a table does not describe a monoid."""


class UsageError(ValueError):
    """Raised when an operation is called outside its domain."""


class UndecidableForm(Exception):
    """A set expression left the closed descriptor algebra.

    Raised instead of returning an approximate answer.
    """
