"""Term syntax for the checker: two sorts, nameless binders, saturated constants.

Binders use de Bruijn indices; the ``hint`` fields carry display names only
and are ignored by ``alpha_eq``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Union

from .errors import UnderflowError


class Sort(Enum):
    STAR = "*"
    BOX = "#"


@dataclass(frozen=True)
class SortRef:
    sort: Sort


@dataclass(frozen=True)
class Var:
    index: int
    hint: str = field(default="_", compare=False)


@dataclass(frozen=True)
class Pi:
    binder_type: "Term"
    body: "Term"
    hint: str = field(default="_", compare=False)


@dataclass(frozen=True)
class Lam:
    binder_type: "Term"
    body: "Term"
    hint: str = field(default="_", compare=False)


@dataclass(frozen=True)
class App:
    fn: "Term"
    arg: "Term"


@dataclass(frozen=True)
class Const:
    name: str
    args: tuple["Term", ...] = ()


Term = Union[SortRef, Var, Pi, Lam, App, Const]

STAR = SortRef(Sort.STAR)
BOX = SortRef(Sort.BOX)


def shift(term: Term, cutoff: int, delta: int) -> Term:
    """Displace free variables with index >= cutoff by delta."""
    match term:
        case Var(k, hint):
            if k < cutoff:
                return term
            if k + delta < 0:
                raise UnderflowError(f"shift would drop variable {hint!r} below zero")
            return Var(k + delta, hint)
        case SortRef():
            return term
        case Pi(a, b, hint):
            return Pi(shift(a, cutoff, delta), shift(b, cutoff + 1, delta), hint)
        case Lam(a, b, hint):
            return Lam(shift(a, cutoff, delta), shift(b, cutoff + 1, delta), hint)
        case App(f, a):
            return App(shift(f, cutoff, delta), shift(a, cutoff, delta))
        case Const(name, args):
            return Const(name, tuple(shift(a, cutoff, delta) for a in args))
    raise TypeError(f"not a term: {term!r}")


def subst(term: Term, target: int, value: Term) -> Term:
    """Capture-avoiding substitution of ``value`` for Var(target).

    Free variables above ``target`` are decremented, so the result lives in
    the context with the target binder removed.
    """
    match term:
        case Var(k, hint):
            if k == target:
                return shift(value, 0, target) if target else value
            return Var(k - 1, hint) if k > target else term
        case SortRef():
            return term
        case Pi(a, b, hint):
            return Pi(subst(a, target, value), subst(b, target + 1, value), hint)
        case Lam(a, b, hint):
            return Lam(subst(a, target, value), subst(b, target + 1, value), hint)
        case App(f, a):
            return App(subst(f, target, value), subst(a, target, value))
        case Const(name, args):
            return Const(name, tuple(subst(a, target, value) for a in args))
    raise TypeError(f"not a term: {term!r}")


def subst_many(term: Term, values: tuple[Term, ...]) -> Term:
    """Simultaneously substitute Var(0)..Var(n-1) with values[n-1]..values[0].

    ``values`` is given in telescope order (first parameter first), matching
    how Definition parameters are instantiated.
    """
    n = len(values)
    if n == 0:
        return term

    def go(t: Term, depth: int) -> Term:
        match t:
            case Var(k, hint):
                if k < depth:
                    return t
                if k - depth < n:
                    return shift(values[n - 1 - (k - depth)], 0, depth)
                return Var(k - n, hint)
            case SortRef():
                return t
            case Pi(a, b, hint):
                return Pi(go(a, depth), go(b, depth + 1), hint)
            case Lam(a, b, hint):
                return Lam(go(a, depth), go(b, depth + 1), hint)
            case App(f, a):
                return App(go(f, depth), go(a, depth))
            case Const(name, args):
                return Const(name, tuple(go(a, depth) for a in args))
        raise TypeError(f"not a term: {t!r}")

    return go(term, 0)


def alpha_eq(a: Term, b: Term) -> bool:
    """Structural equality up to binder display names."""
    match (a, b):
        case (SortRef(s1), SortRef(s2)):
            return s1 is s2
        case (Var(i, _), Var(j, _)):
            return i == j
        case (Pi(a1, b1, _), Pi(a2, b2, _)):
            return alpha_eq(a1, a2) and alpha_eq(b1, b2)
        case (Lam(a1, b1, _), Lam(a2, b2, _)):
            return alpha_eq(a1, a2) and alpha_eq(b1, b2)
        case (App(f1, x1), App(f2, x2)):
            return alpha_eq(f1, f2) and alpha_eq(x1, x2)
        case (Const(n1, args1), Const(n2, args2)):
            return (
                n1 == n2
                and len(args1) == len(args2)
                and all(alpha_eq(x, y) for x, y in zip(args1, args2))
            )
    return False


def subterms(term: Term) -> Iterator[Term]:
    """All subterms, preorder, including the term itself."""
    yield term
    match term:
        case Pi(a, b, _) | Lam(a, b, _):
            yield from subterms(a)
            yield from subterms(b)
        case App(f, a):
            yield from subterms(f)
            yield from subterms(a)
        case Const(_, args):
            for a in args:
                yield from subterms(a)


def max_free_index(term: Term) -> int:
    """Largest free de Bruijn index, or -1 when the term is closed."""
    match term:
        case Var(k, _):
            return k
        case SortRef():
            return -1
        case Pi(a, b, _) | Lam(a, b, _):
            return max(max_free_index(a), max_free_index(b) - 1)
        case App(f, a):
            return max(max_free_index(f), max_free_index(a))
        case Const(_, args):
            return max((max_free_index(a) for a in args), default=-1)
    raise TypeError(f"not a term: {term!r}")


def spine(term: Term) -> tuple[Term, list[Term]]:
    """Split nested applications into (head, [args])."""
    args: list[Term] = []
    while isinstance(term, App):
        args.append(term.arg)
        term = term.fn
    args.reverse()
    return term, args


def apply_spine(head: Term, args: list[Term]) -> Term:
    for a in args:
        head = App(head, a)
    return head
