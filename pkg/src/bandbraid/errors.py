"""Exception types raised across the package."""


class BraidError(Exception):
    """Base class for every error raised by bandbraid."""


class IndexOrderError(BraidError, ValueError):
    """A band a(t,s) was requested with t <= s."""


class OutOfRangeError(BraidError, ValueError):
    """A strand index lies outside 1..n."""


class WordSyntaxError(BraidError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class NegativeLetterError(BraidError, ValueError):
    """An inverse Artin letter cannot be mapped to a positive band word."""


class EmptyWordError(BraidError, ValueError):
    pass


class InapplicableMoveError(BraidError):
    def __init__(self, reason: str, position: int | None = None, index: int | None = None):
        where = ""
        if index is not None:
            where += f"move #{index}: "
        if position is not None:
            where += f"position {position}: "
        super().__init__(where + reason)
        self.reason = reason
        self.position = position
        self.index = index


class CycleCountMismatchError(BraidError):
    def __init__(self, expected: int, found: int):
        super().__init__(f"certificate has {found} cycling moves, expected {expected}")
        self.expected = expected
        self.found = found


class InadmissibleCycleError(InapplicableMoveError):
    """A cycling move was taken at a step the predicate rejects."""


class BudgetExhaustedError(BraidError):
    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} states exhausted")
        self.budget = budget
