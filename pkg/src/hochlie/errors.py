"""Exception hierarchy.

Every error raised by the library derives from :class:`HochError`.  The CLI
maps the three families below onto its exit codes:

* :class:`InputError` -- malformed or inconsistent user input (exit 1)
* :class:`InfiniteDimensional` -- the monomial algebra is not finite dimensional (exit 2)
* :class:`InternalError` -- an internal invariant failed; always a bug (exit 3)
"""

from __future__ import annotations


class HochError(Exception):
    """Base class for all library errors."""


class InputError(HochError):
    """The user supplied something the library cannot work with."""


class InternalError(HochError):
    """An invariant that should hold by construction was violated."""


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotPrime(InputError):
    pass


class UnknownVertex(InputError):
    pass


class UnknownArrow(InputError):
    pass


class DuplicateName(InputError):
    pass


class NonComposable(InputError):
    pass


class RelationTooShort(InputError):
    pass


class NonMinimal(InputError):
    def __init__(self, message: str, inner=None, outer=None):
        super().__init__(message)
        self.inner = inner
        self.outer = outer


class NotParallel(InputError):
    pass


class BadSpec(InputError):
    pass


class InfiniteDimensional(HochError):
    pass


class CapExceeded(InputError):
    pass


class NotSubspace(InputError):
    pass


class Inapplicable(InputError):
    pass


class WrongCharacteristic(InputError):
    pass


class NotEBimodule(InputError):
    pass


class ComplexBroken(InternalError):
    pass


class DimensionMismatch(InternalError):
    pass


class LieAxiomViolation(InternalError):
    pass


class MismatchReport(InternalError):
    """The brute-force oracle disagrees with the minimal-complex pipeline."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
