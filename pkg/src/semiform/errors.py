"""Exception types shared across the package."""


class ContextError(ValueError):
    """Two polynomials (or a polynomial and a space) disagree on the form degree n."""


class CapacityError(RuntimeError):
    """A request exceeds the desk-scale guardrail on space dimensions."""


class TheoremViolation(AssertionError):
    """A computation contradicted a classical theorem. Should never be raised."""
