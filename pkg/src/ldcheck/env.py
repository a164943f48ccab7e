"""Definitions and the checked environment (the ordered "book" of entries)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import DuplicateName, UnknownConstant
from .terms import Term

Telescope = tuple[tuple[str, Term], ...]


@dataclass(frozen=True)
class Definition:
    """One environment entry.

    ``body`` is None for primitive definitions (axioms): they type-check
    against their declared type but never unfold.
    """

    name: str
    params: Telescope
    declared_type: Term
    body: Optional[Term]

    @property
    def is_primitive(self) -> bool:
        return self.body is None

    @property
    def arity(self) -> int:
        return len(self.params)


@dataclass
class Environment:
    defs: list[Definition] = field(default_factory=list)
    index: dict[str, int] = field(default_factory=dict)

    def __contains__(self, name: str) -> bool:
        return name in self.index

    def __len__(self) -> int:
        return len(self.defs)

    def __iter__(self) -> Iterator[Definition]:
        return iter(self.defs)

    def lookup(self, name: str) -> Definition:
        pos = self.index.get(name)
        if pos is None:
            raise UnknownConstant(f"unknown constant {name!r}")
        return self.defs[pos]

    def position(self, name: str) -> int:
        pos = self.index.get(name)
        if pos is None:
            raise UnknownConstant(f"unknown constant {name!r}")
        return pos

    def add(self, d: Definition) -> None:
        if d.name in self.index:
            raise DuplicateName(f"duplicate definition {d.name!r}")
        self.index[d.name] = len(self.defs)
        self.defs.append(d)

    def extended(self, d: Definition) -> "Environment":
        env = Environment(list(self.defs), dict(self.index))
        env.add(d)
        return env
