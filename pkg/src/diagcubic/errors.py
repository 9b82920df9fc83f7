"""Exception hierarchy shared by all diagcubic modules."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain.

    Examples: inverting zero, asking for cubic classes when q = 2 (mod 3),
    evaluating the non-cubic sign factor at a cube.
    """


class IntegrityError(RuntimeError):
    """An internal consistency assertion failed.

    Raised when two independent computations of the same quantity disagree,
    or when a uniqueness claim the closed forms rely on is violated.  This
    always indicates a bug or an unsupported input, never a user error.
    """


class ResourceError(RuntimeError):
    """A brute-force enumeration would exceed its configured size cap."""
