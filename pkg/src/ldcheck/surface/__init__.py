from .cst import BUILTIN_NOTATIONS, Notation, SourceModule
from .elaborate import elaborate, elaborate_term
from .parser import parse_module
from .pretty import pretty_definition, pretty_term

__all__ = [
    "BUILTIN_NOTATIONS",
    "Notation",
    "SourceModule",
    "elaborate",
    "elaborate_term",
    "parse_module",
    "pretty_definition",
    "pretty_term",
]
