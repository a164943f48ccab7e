"""Error hierarchy shared by the kernel, the surface syntax, and the CLI.

Every checker failure carries a ``kind`` string that is stable across runs;
the JSON report and the mutation harness key off it.
"""

from __future__ import annotations

from typing import Optional


class LDError(Exception):
    kind = "Error"

    def __init__(self, message: str, span: Optional[tuple[int, int]] = None):
        super().__init__(message)
        self.message = message
        self.span = span


class UnderflowError(LDError):
    kind = "Underflow"


class UnboundVariable(LDError):
    kind = "UnboundVariable"


class UnknownConstant(LDError):
    kind = "UnknownConstant"


class ArityMismatch(LDError):
    kind = "ArityMismatch"


class NotAFunction(LDError):
    kind = "NotAFunction"


class TypeMismatch(LDError):
    kind = "TypeMismatch"


class SortError(LDError):
    kind = "SortError"


class FuelExhausted(LDError):
    kind = "FuelExhausted"


class DuplicateName(LDError):
    kind = "DuplicateName"


class ParseError(LDError):
    kind = "SyntaxError"

    def __init__(self, message: str, span: tuple[int, int], expected: frozenset[str] = frozenset()):
        super().__init__(message, span)
        self.expected = expected


class UnboundName(LDError):
    kind = "UnboundName"


class MissingEntry(LDError):
    kind = "MissingEntry"


class AcceptedMutant(LDError):
    kind = "AcceptedMutant"


TYPE_LEVEL_KINDS = frozenset(
    {
        "UnboundVariable",
        "UnknownConstant",
        "ArityMismatch",
        "NotAFunction",
        "TypeMismatch",
        "SortError",
        "DuplicateName",
    }
)
