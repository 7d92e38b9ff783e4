"""Exception types shared across the package."""


class PermrelError(Exception):
    """Base class for all package errors."""


class WordSyntaxError(PermrelError, ValueError):
    """A word literal could not be parsed."""


class LetterOutOfRangeError(PermrelError, ValueError):
    """A parsed letter falls outside the alphabet 1..n."""


class MixedDegreeError(PermrelError, ValueError):
    """Permutations of different degrees were combined."""


class NotIrreducibleError(PermrelError, ValueError):
    """A word that must already be in normal form is reducible."""


class InvalidRedexError(PermrelError, ValueError):
    """A redex does not actually match the host word."""


class LengthMismatchError(PermrelError, ValueError):
    """Words of different lengths were queried against a length-graded table."""


class CentralityError(PermrelError, ValueError):
    """The full product of generators is not central for the given relations."""


class UnsupportedGroupError(PermrelError, ValueError):
    """An operation only defined for the cyclic relation set got another set."""


class BudgetExceededError(PermrelError, RuntimeError):
    """An enumeration would exceed the configured word budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} words, budget allows {budget}"
        )
