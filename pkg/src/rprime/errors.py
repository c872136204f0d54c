"""Exception types shared across the package."""


class RPrimeError(Exception):
    """Base class for all domain errors raised by this package."""


class FieldSpecError(RPrimeError):
    """A field-spec document is malformed or violates a type invariant."""


class IndexDivisorError(RPrimeError):
    """Splitting requested at a prime where factoring the defining
    polynomial may misreport the decomposition (p^2 divides the
    polynomial discriminant, the order is not asserted maximal, and no
    override is available)."""


class BudgetExceededError(RPrimeError):
    """An enumeration or counting request exceeds its documented guard."""


class ToleranceError(RPrimeError):
    """A requested numeric tolerance cannot be certified under the
    configured prime cap."""
