"""Exception types shared across the package."""


class PomsetBlockError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(PomsetBlockError):
    """Operands disagree on ground-set size, height, or coordinate length."""


class SpaceMismatch(PomsetBlockError):
    """Vectors or codes from different block spaces were combined."""


class CycleDetected(PomsetBlockError):
    """The supplied order relation is cyclic after transitive closure."""


class NotAnIdeal(PomsetBlockError):
    """A multiset violates the down-closure law of the given pomset."""


class SpaceTooLarge(PomsetBlockError):
    """An exhaustive enumeration would exceed the configured cap."""


class NotAChain(PomsetBlockError):
    """An operation defined only for chain orders was called elsewhere."""


class NotFullCount(PomsetBlockError):
    """The operation requires an ideal whose root elements all carry full count."""


class NonUnitBlocks(PomsetBlockError):
    """The operation requires every block to have length one."""


class NonUniformBlocks(PomsetBlockError):
    """The operation requires every block to have the same length."""


class NotLinear(PomsetBlockError):
    """The operation requires a code closed under addition."""


class SingletonCode(PomsetBlockError):
    """Minimum distance is undefined for a one-word code."""


class BadCardinality(PomsetBlockError):
    """The code size does not fit the shape required by the operation."""


class DivisibilityFails(PomsetBlockError):
    """A partial count does not satisfy the (2t+1) | m condition.

    Carries the offending element and its count as ``index`` and ``count``.
    """

    def __init__(self, index: int, count: int, m: int):
        self.index = index
        self.count = count
        self.m = m
        super().__init__(
            f"element {index} has partial count {count} but {2 * count + 1} "
            f"does not divide {m}; its ball admits no partitioning translates"
        )


class ParseError(PomsetBlockError):
    """A text input could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
