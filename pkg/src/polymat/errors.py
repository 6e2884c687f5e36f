"""Exception types shared across the package."""

from __future__ import annotations


class PolymatError(Exception):
    """Base class for all errors raised by this package."""


class InvalidAmbient(PolymatError):
    """Exponent vector length or variable index disagrees with the ambient variable count."""


class EmptyIdeal(PolymatError):
    """Operation requires a nonzero ideal."""


class NotProper(PolymatError):
    """Operation requires a nonzero proper ideal (neither (0) nor the whole ring)."""


class VerificationFailed(PolymatError):
    """An internally recomputed certificate did not reproduce the input exactly."""


class OracleBudgetExceeded(PolymatError):
    """The brute-force divisor scan would exceed the configured budget."""


class BudgetExceeded(PolymatError):
    """The enumeration candidate space exceeds the configured budget."""


class NotPolymatroidal(PolymatError):
    """Operation requires an ideal satisfying the exchange condition."""


class NotMatroidal(PolymatError):
    """Operation requires a squarefree ideal satisfying the exchange condition."""


class NotFullySupported(PolymatError):
    """Operation requires every ambient variable to divide some generator."""


class EmptyFamily(PolymatError):
    """Capped-degree construction admits no generators (caps sum below the degree)."""


class DegreeTooLarge(PolymatError):
    """Edge degree exceeds the number of blocks in the partition."""


class SupportOverlap(PolymatError):
    """Factors of a product construction must have pairwise disjoint supports."""


class Mixed(PolymatError):
    """Operation requires an unmixed ideal."""


class ClassificationIncomplete(PolymatError):
    """No classification case could be certified for an unmixed input.

    This should never fire; it signals either an implementation bug or a
    genuine counterexample to the classification being applied.
    """


class IdealSyntaxError(PolymatError):
    """Malformed ideal or monomial text. Carries 1-based line and column.

    Named to avoid shadowing the Python builtin SyntaxError.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class IndexOutOfRange(PolymatError):
    """Variable index exceeds the declared ambient variable count."""


class EmptyInput(PolymatError):
    """Ideal text contains no generators."""


class AmbientInferredWarning(UserWarning):
    """The ambient variable count was inferred from the largest index present."""
