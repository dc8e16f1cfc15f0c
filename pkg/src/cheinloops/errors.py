"""Exception hierarchy shared by the library, the service, and the CLI.

Two families matter for exit-code and HTTP mapping: BadArgumentError for
malformed input (CLI exit 2, HTTP 400) and HypothesisError for structurally
valid input that violates a precondition (CLI exit 3, HTTP 409).
"""


class BadArgumentError(ValueError):
    """Malformed input: unparseable spec strings, bad tables, unknown names."""


class TableFormatError(BadArgumentError):
    """Cayley-table text that does not follow the file format."""


class GroupSpecError(BadArgumentError):
    """Group spec string outside the C<n>/D<2n>/S<n>/Q8 product grammar."""


class NotAGroupError(BadArgumentError):
    """Table failed group validation; carries the offending witness."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = tuple(int(v) for v in witness)


class IdentitySyntaxError(BadArgumentError):
    """Identity string rejected by the parser; carries the error position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class HypothesisError(ValueError):
    """Input is well-formed but outside the stated hypothesis of an operation."""


class NotALoopError(HypothesisError):
    """Operation needs a loop (Latin square with neutral element 0)."""


class InverseUndefinedError(HypothesisError):
    """Identity uses ^-1 but the magma lacks unique two-sided inverses."""


class BudgetError(HypothesisError):
    """Identity check would exceed the evaluation or variable budget."""


class SearchCapError(HypothesisError):
    """Isomorphism search not attempted: order exceeds the cap."""
