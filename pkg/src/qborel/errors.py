"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed poset file or monomial string."""


class TheoremViolation(RuntimeError):
    """A structural identity that must hold failed on a concrete instance.

    Raised instead of returning wrong data: if one of the closed-form
    routes disagrees with an independent computation, the caller must
    see the instance, not a silently chosen answer.
    """
