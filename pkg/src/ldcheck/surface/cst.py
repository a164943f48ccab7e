"""Concrete syntax trees produced by the parser, before elaboration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

Span = tuple[int, int]


@dataclass(frozen=True)
class SSort:
    star: bool
    span: Span


@dataclass(frozen=True)
class SName:
    name: str
    span: Span


@dataclass(frozen=True)
class SCall:
    name: str
    args: tuple["STerm", ...]
    span: Span


@dataclass(frozen=True)
class SApp:
    fn: "STerm"
    arg: "STerm"
    span: Span


# One binder group: names sharing a type, e.g. (x y : S).
BinderGroup = tuple[tuple[str, ...], "STerm"]


@dataclass(frozen=True)
class SPi:
    groups: tuple[BinderGroup, ...]
    body: "STerm"
    span: Span


@dataclass(frozen=True)
class SArrow:
    lhs: "STerm"
    rhs: "STerm"
    span: Span


@dataclass(frozen=True)
class SLam:
    groups: tuple[BinderGroup, ...]
    body: "STerm"
    span: Span


STerm = Union[SSort, SName, SCall, SApp, SPi, SArrow, SLam]


@dataclass(frozen=True)
class Notation:
    """A syntactic operator bound to a constant; expansion is literal."""

    symbol: str
    target: str
    fixity: str  # 'infixr' | 'prefix'
    precedence: int


@dataclass(frozen=True)
class ItemDef:
    name: str
    params: tuple[BinderGroup, ...]
    declared_type: STerm
    body: Optional[STerm]  # None for prim
    span: Span


@dataclass(frozen=True)
class ItemImport:
    path: str
    span: Span


@dataclass(frozen=True)
class ItemNotation:
    notation: Notation
    span: Span


@dataclass(frozen=True)
class ItemFlag:
    groups: tuple[BinderGroup, ...]
    items: tuple["Item", ...]
    span: Span


Item = Union[ItemDef, ItemImport, ItemNotation, ItemFlag]


@dataclass
class SourceModule:
    path: str
    items: list[Item] = field(default_factory=list)
    notations: list[Notation] = field(default_factory=list)

    def imports(self) -> list[ItemImport]:
        return [i for i in self.items if isinstance(i, ItemImport)]


# The fixed operator table: application binds tightest, then prefix negation,
# conjunction, disjunction, the arrow, and bi-implication loosest.
PREC_IFF = 10
PREC_ARROW = 15
PREC_OR = 20
PREC_AND = 30
PREC_NOT = 40
PREC_APP = 50

BUILTIN_NOTATIONS = (
    Notation("/\\", "and", "infixr", PREC_AND),
    Notation("\\/", "or", "infixr", PREC_OR),
    Notation("<=>", "iff", "infixr", PREC_IFF),
    Notation("~", "not", "prefix", PREC_NOT),
)
