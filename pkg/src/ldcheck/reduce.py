"""Beta/delta reduction: weak head normal form, full normalization, conversion.

Every reduction step draws from a shared Fuel budget so that runaway
unfolding surfaces as FuelExhausted, never as a bogus mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .env import Environment
from .errors import ArityMismatch, FuelExhausted, UnknownConstant
from .terms import (
    App,
    Const,
    Lam,
    Pi,
    SortRef,
    Term,
    Var,
    alpha_eq,
    apply_spine,
    spine,
    subst,
    subst_many,
)

DEFAULT_FUEL = 1_000_000


@dataclass
class Fuel:
    """Mutable step budget shared across one judgment."""

    limit: int = DEFAULT_FUEL
    beta_steps: int = 0
    delta_steps: int = 0
    trace: Optional[Callable[[str, Term], None]] = None

    def spend_beta(self, at: Term) -> None:
        self.beta_steps += 1
        if self.trace:
            self.trace("beta", at)
        self._check()

    def spend_delta(self, at: Term) -> None:
        self.delta_steps += 1
        if self.trace:
            self.trace("delta", at)
        self._check()

    def _check(self) -> None:
        if self.beta_steps + self.delta_steps > self.limit:
            raise FuelExhausted(f"step budget of {self.limit} exceeded")

    @property
    def used(self) -> int:
        return self.beta_steps + self.delta_steps


class Opaque:
    """Marker returned by delta_unfold for primitive constants."""

    _instance: Optional["Opaque"] = None

    def __new__(cls) -> "Opaque":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Opaque"


OPAQUE = Opaque()


def delta_unfold(env: Environment, c: Const):
    """Unfold one constant: body with arguments substituted, or Opaque."""
    d = env.lookup(c.name)
    if len(c.args) != d.arity:
        raise ArityMismatch(
            f"{c.name} expects {d.arity} argument(s), got {len(c.args)}"
        )
    if d.is_primitive:
        return OPAQUE
    return subst_many(d.body, c.args)


def _unfoldable(env: Environment, name: str, frozen: frozenset[str]) -> bool:
    if name in frozen:
        return False
    d = env.lookup(name)
    return not d.is_primitive


def head_beta(term: Term, fuel: Fuel) -> Term:
    """Contract beta redexes at the head of the application spine only."""
    head, args = spine(term)
    changed = False
    while isinstance(head, Lam) and args:
        fuel.spend_beta(head)
        head = subst(head.body, 0, args.pop(0))
        changed = True
        while isinstance(head, App):
            inner_head, inner_args = spine(head)
            args[:0] = inner_args
            head = inner_head
    return apply_spine(head, args) if changed or args else head


def whnf(
    env: Environment,
    term: Term,
    fuel: Fuel,
    frozen: frozenset[str] = frozenset(),
) -> Term:
    """Reduce until the head is neither a beta redex nor an unfoldable constant."""
    term = head_beta(term, fuel)
    while True:
        head, args = spine(term)
        if isinstance(head, Const) and _unfoldable(env, head.name, frozen):
            fuel.spend_delta(head)
            term = head_beta(apply_spine(delta_unfold(env, head), args), fuel)
        else:
            return term


def normalize(
    env: Environment,
    term: Term,
    fuel: Fuel,
    frozen: frozenset[str] = frozenset(),
) -> Term:
    """Full beta/delta normal form; primitive and frozen constants remain."""
    term = whnf(env, term, fuel, frozen)
    match term:
        case SortRef() | Var():
            return term
        case Pi(a, b, hint):
            return Pi(normalize(env, a, fuel, frozen), normalize(env, b, fuel, frozen), hint)
        case Lam(a, b, hint):
            return Lam(normalize(env, a, fuel, frozen), normalize(env, b, fuel, frozen), hint)
        case Const(name, args):
            return Const(name, tuple(normalize(env, a, fuel, frozen) for a in args))
        case App():
            head, args = spine(term)
            head = (
                Const(head.name, tuple(normalize(env, a, fuel, frozen) for a in head.args))
                if isinstance(head, Const)
                else normalize(env, head, fuel, frozen)
            )
            return apply_spine(head, [normalize(env, a, fuel, frozen) for a in args])
    raise TypeError(f"not a term: {term!r}")


def convertible(env: Environment, a: Term, b: Term, fuel: Fuel) -> bool:
    """Decide whether a and b share a beta/delta reduct.

    Strategy: weak-head both sides; identical descriptive heads first try
    pairwise argument conversion and unfold both on failure; distinct
    descriptive heads unfold the one defined later in the environment.
    Primitive constants compare by name and arguments only.
    """
    a = head_beta(a, fuel)
    b = head_beta(b, fuel)
    if alpha_eq(a, b):
        return True

    ha, sa = spine(a)
    hb, sb = spine(b)

    def unfold(head: Const, args: list[Term]) -> Term:
        fuel.spend_delta(head)
        return head_beta(apply_spine(delta_unfold(env, head), args), fuel)

    if isinstance(ha, Const) and isinstance(hb, Const):
        da, db = env.lookup(ha.name), env.lookup(hb.name)
        if ha.name == hb.name:
            if len(sa) == len(sb) and all(
                convertible(env, x, y, fuel) for x, y in zip(ha.args + tuple(sa), hb.args + tuple(sb))
            ):
                return True
            if da.is_primitive:
                return False
            return convertible(env, unfold(ha, sa), unfold(hb, sb), fuel)
        if da.is_primitive and db.is_primitive:
            return False
        if da.is_primitive:
            return convertible(env, a, unfold(hb, sb), fuel)
        if db.is_primitive:
            return convertible(env, unfold(ha, sa), b, fuel)
        if env.position(ha.name) >= env.position(hb.name):
            return convertible(env, unfold(ha, sa), b, fuel)
        return convertible(env, a, unfold(hb, sb), fuel)

    if isinstance(ha, Const) and not env.lookup(ha.name).is_primitive:
        return convertible(env, unfold(ha, sa), b, fuel)
    if isinstance(hb, Const) and not env.lookup(hb.name).is_primitive:
        return convertible(env, a, unfold(hb, sb), fuel)

    match (ha, hb):
        case (SortRef(s1), SortRef(s2)):
            same = s1 is s2
        case (Var(i, _), Var(j, _)):
            same = i == j
        case (Const(n1, args1), Const(n2, args2)):
            same = (
                n1 == n2
                and len(args1) == len(args2)
                and all(convertible(env, x, y, fuel) for x, y in zip(args1, args2))
            )
        case (Pi(a1, b1, _), Pi(a2, b2, _)) | (Lam(a1, b1, _), Lam(a2, b2, _)):
            same = convertible(env, a1, a2, fuel) and convertible(env, b1, b2, fuel)
        case _:
            return False
    return same and len(sa) == len(sb) and all(
        convertible(env, x, y, fuel) for x, y in zip(sa, sb)
    )
