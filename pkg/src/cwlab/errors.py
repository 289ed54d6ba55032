"""Exception hierarchy shared by all cwlab modules."""


class UsageError(ValueError):
    """Bad input from the caller (CLI exit code 2)."""


class ModulusMismatchError(UsageError):
    """Operands live over different moduli; values are never coerced."""


class BudgetExceededError(UsageError):
    """An enumeration would exceed the configured multiplication budget."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"enumeration needs about {needed} matrix multiplications, "
            f"budget is {budget}"
        )


class VerificationError(RuntimeError):
    """A computed result contradicts a cross-checked classification rule
    (CLI exit code 1)."""


class InternalCheckError(RuntimeError):
    """A provably-impossible state was reached; indicates a bug, not bad input."""
