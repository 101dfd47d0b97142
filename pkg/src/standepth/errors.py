"""Exception taxonomy shared by every engine.

Exit-code mapping used by the CLI: input problems (bad arity, bad boxes,
unparseable models) are "input errors"; failed validations and broken
chains are "assertion failures"; blown node budgets are "resource limits".
"""

from __future__ import annotations


class StandepthError(Exception):
    """Base class for every error raised by this package."""


class InputError(StandepthError):
    """Malformed or inconsistent input (CLI exit code 1)."""


class ArityMismatch(InputError):
    """Operands live in polynomial rings of different arity."""


class UnitMonomial(InputError):
    """The unit monomial was passed where a non-unit is required."""


class ZeroModule(InputError):
    """The operation is undefined on the zero module."""


class BadBox(InputError):
    """A truncation box does not dominate the default box."""


class SuiteUnknown(InputError):
    """Unknown corpus suite name."""


class ParseError(InputError):
    """Model or decomposition JSON could not be parsed."""


class UnknownVariable(ParseError):
    """A monomial string references an undeclared variable."""

    def __init__(self, name: str):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


class ContainmentViolated(InputError):
    """The bottom ideal of a quotient is not contained in the top ideal."""


class AssertionFailure(StandepthError):
    """A decision procedure rejected its input (CLI exit code 2)."""


class InvalidInput(AssertionFailure):
    """A decomposition handed to a transformation failed validation."""


class NotRegular(AssertionFailure):
    """The monomial is a zero divisor on the module."""


class ChainBroken(AssertionFailure):
    """A filtration link T_{i-1} is not contained in T_i."""

    def __init__(self, index: int):
        super().__init__(f"chain containment fails at link {index}")
        self.index = index


class InvalidPartition(AssertionFailure):
    """An interval partition violates the poset-partition invariants."""


class ValidationError(AssertionFailure):
    """A claimed Stanley decomposition is not one; carries a witness."""

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


class NotCovered(ValidationError):
    def __init__(self, witness: tuple[int, ...]):
        super().__init__(f"monomial {witness} is in the module but in no space", witness)


class Overlap(ValidationError):
    def __init__(self, witness: tuple[int, ...], first: int, second: int):
        super().__init__(
            f"monomial {witness} lies in spaces {first} and {second}", witness
        )
        self.first = first
        self.second = second


class OutsideTarget(ValidationError):
    def __init__(self, witness: tuple[int, ...], space: int):
        super().__init__(
            f"monomial {witness} of space {space} is not in the module", witness
        )
        self.space = space


class SearchLimitExceeded(StandepthError):
    """The exact-cover search ran out of node budget (CLI exit code 3)."""
