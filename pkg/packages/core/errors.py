"""Exception hierarchy shared by every package in the counting pipeline."""


class DecompositionError(Exception):
    """Base class for all errors raised by this project."""


# Factorizations


class FactorizationParseError(DecompositionError, ValueError):
    """A textual factorization could not be parsed."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse factorization {text!r} at part {position}: {reason}")


class ProductMismatchError(DecompositionError, ValueError):
    """Two factorizations (or a factorization and n) disagree on their product."""


class BasisMismatchError(DecompositionError, ValueError):
    """Two factorizations do not share the same multiset of parts."""


# Relation graphs


class NotStronglyConnectedError(DecompositionError, ValueError):
    """An operation that needs a single SCC was given a larger graph."""


class GraphTooSmallError(DecompositionError, ValueError):
    """A sorting was requested on a graph with a single vertex."""


# Counting


class NotCoprimeError(DecompositionError, ValueError):
    """Degrees that must be coprime share a factor."""


class BadOrderError(DecompositionError, ValueError):
    """Degrees were given in the wrong order (expected d > e)."""


class BadArgumentsError(DecompositionError, ValueError):
    """Arguments violate a precondition of a closed-form count."""


# Finite-field polynomials


class BadDegreeError(DecompositionError, ValueError):
    """A polynomial has a degree that the operation cannot accept."""


class BadDivisorError(DecompositionError, ValueError):
    """A requested left degree is not a proper tame divisor of deg f."""


class NotMonicOriginalError(DecompositionError, ValueError):
    """A polynomial is not monic with zero constant term."""


class NoSwapExistsError(DecompositionError):
    """Two components cannot be exchanged by a Ritt move."""


class NotACollisionError(DecompositionError):
    """Two decompositions do not compose to the same polynomial."""


# Oracles


class BudgetExceededError(DecompositionError):
    """A brute-force enumeration would exceed the configured budget."""

    def __init__(self, cost: int, budget: int, what: str):
        self.cost = cost
        self.budget = budget
        super().__init__(f"{what} needs {cost} steps, budget is {budget}")


class WildCharacteristicError(DecompositionError, ValueError):
    """The characteristic divides the degree, so the tame theory does not apply."""

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        super().__init__(
            f"tame case requires characteristic coprime to n (p={p} divides n={n})"
        )
